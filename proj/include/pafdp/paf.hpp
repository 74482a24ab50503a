#pragma once

#include "pafdp/framework.hpp"
#include "pafdp/rational.hpp"

#include <string>
#include <vector>

namespace pafdp {

/// Probabilistic argumentation framework under the independence model:
/// marginal probabilities in (0,1] for every argument and attack.
/// Zero-probability elements are rejected; they must be removed up front.
class Paf {
 public:
  Paf() = default;
  Paf(ArgumentationFramework af, std::vector<Rational> arg_prob, std::vector<Rational> att_prob);

  const ArgumentationFramework& framework() const { return af_; }
  const Rational& arg_probability(ArgIndex a) const { return arg_prob_[a]; }
  const Rational& attack_probability(AttackIndex r) const { return att_prob_[r]; }
  bool arg_certain(ArgIndex a) const { return arg_prob_[a] == 1; }
  bool attack_certain(AttackIndex r) const { return att_prob_[r] == 1; }

  std::size_t num_uncertain_arguments() const;
  std::size_t num_uncertain_attacks() const;

  /// Membership in F_P: structurally a subframework, every certain argument
  /// present, every certain attack between present arguments present.
  bool is_certain_respecting(const Subframework& f) const;

  /// Product formula of the independence model.
  /// Throws InputError unless f is certain-respecting.
  Rational subframework_probability(const Subframework& f) const;

  /// Copy with the given arguments and their incident attacks deleted.
  Paf without(const ArgSet& removed) const;

  class Builder;

 private:
  ArgumentationFramework af_;
  std::vector<Rational> arg_prob_;
  std::vector<Rational> att_prob_;
};

/// Name-based construction; probabilities given exactly or as decimal text.
class Paf::Builder {
 public:
  Builder& argument(std::string name, Rational p = 1);
  Builder& argument(std::string name, std::string_view decimal);
  Builder& attack(std::string source, std::string target, Rational p = 1);
  Builder& attack(std::string source, std::string target, std::string_view decimal);
  /// Throws InputError on duplicates, unknown endpoints or probabilities
  /// outside (0,1].
  Paf build() const;

 private:
  std::vector<std::pair<std::string, Rational>> args_;
  std::vector<std::tuple<std::string, std::string, Rational>> attacks_;
};

}  // namespace pafdp
