#include "pafdp/paf.hpp"

#include "pafdp/errors.hpp"


namespace pafdp {

namespace {

void check_probability(const Rational& p, const std::string& what) {
  if (p == 0) throw InputError("zero-probability " + what + "; remove it");
  if (p < 0 || p > 1) throw InputError("probability of " + what + " outside (0,1]");
}

Rational decimal_or_throw(std::string_view text) {
  auto p = parse_decimal(text);
  if (!p) throw InputError("malformed probability '" + std::string(text) + "'");
  return *p;
}

}  // namespace

Paf::Paf(ArgumentationFramework af, std::vector<Rational> arg_prob,
         std::vector<Rational> att_prob)
    : af_(std::move(af)), arg_prob_(std::move(arg_prob)), att_prob_(std::move(att_prob)) {
  if (arg_prob_.size() != af_.num_arguments() || att_prob_.size() != af_.num_attacks()) {
    throw InputError("every argument and attack needs a probability");
  }
  for (auto& p : arg_prob_) p.canonicalize();
  for (auto& p : att_prob_) p.canonicalize();
  for (ArgIndex a = 0; a < arg_prob_.size(); ++a) {
    check_probability(arg_prob_[a], "argument " + af_.name(a));
  }
  for (AttackIndex r = 0; r < att_prob_.size(); ++r) {
    const auto& att = af_.attack(r);
    check_probability(att_prob_[r],
                      "attack (" + af_.name(att.source) + "," + af_.name(att.target) + ")");
  }
}

std::size_t Paf::num_uncertain_arguments() const {
  std::size_t n = 0;
  for (const auto& p : arg_prob_) n += p != 1;
  return n;
}

std::size_t Paf::num_uncertain_attacks() const {
  std::size_t n = 0;
  for (const auto& p : att_prob_) n += p != 1;
  return n;
}

bool Paf::is_certain_respecting(const Subframework& f) const {
  if (f.args.size() != af_.num_arguments() || f.attacks.size() != af_.num_attacks()) return false;
  for (ArgIndex a = 0; a < af_.num_arguments(); ++a) {
    if (arg_certain(a) && !f.args.test(a)) return false;
  }
  for (AttackIndex r = 0; r < af_.num_attacks(); ++r) {
    const auto& att = af_.attack(r);
    const bool endpoints = f.args.test(att.source) && f.args.test(att.target);
    if (f.attacks.test(r) && !endpoints) return false;
    if (endpoints && attack_certain(r) && !f.attacks.test(r)) return false;
  }
  return true;
}

Rational Paf::subframework_probability(const Subframework& f) const {
  if (!is_certain_respecting(f)) {
    throw InputError("subframework is not certain-respecting");
  }
  Rational p = 1;
  for (ArgIndex a = 0; a < af_.num_arguments(); ++a) {
    p *= f.args.test(a) ? arg_prob_[a] : Rational(1 - arg_prob_[a]);
  }
  for (AttackIndex r = 0; r < af_.num_attacks(); ++r) {
    const auto& att = af_.attack(r);
    if (!f.args.test(att.source) || !f.args.test(att.target)) continue;
    p *= f.attacks.test(r) ? att_prob_[r] : Rational(1 - att_prob_[r]);
  }
  return p;
}

Paf Paf::without(const ArgSet& removed) const {
  af_.check_set(removed);
  Builder builder;
  for (ArgIndex a = 0; a < af_.num_arguments(); ++a) {
    if (!removed.test(a)) builder.argument(af_.name(a), arg_prob_[a]);
  }
  for (AttackIndex r = 0; r < af_.num_attacks(); ++r) {
    const auto& att = af_.attack(r);
    if (removed.test(att.source) || removed.test(att.target)) continue;
    builder.attack(af_.name(att.source), af_.name(att.target), att_prob_[r]);
  }
  return builder.build();
}

Paf::Builder& Paf::Builder::argument(std::string name, Rational p) {
  args_.emplace_back(std::move(name), std::move(p));
  return *this;
}

Paf::Builder& Paf::Builder::argument(std::string name, std::string_view decimal) {
  return argument(std::move(name), decimal_or_throw(decimal));
}

Paf::Builder& Paf::Builder::attack(std::string source, std::string target, Rational p) {
  attacks_.emplace_back(std::move(source), std::move(target), std::move(p));
  return *this;
}

Paf::Builder& Paf::Builder::attack(std::string source, std::string target,
                                   std::string_view decimal) {
  return attack(std::move(source), std::move(target), decimal_or_throw(decimal));
}

Paf Paf::Builder::build() const {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [name, p] : args_) names.push_back(name);
  for (const auto& [src, dst, p] : attacks_) pairs.emplace_back(src, dst);
  ArgumentationFramework af(std::move(names), pairs);

  std::vector<Rational> arg_prob(af.num_arguments());
  for (const auto& [name, p] : args_) arg_prob[af.index_of(name)] = p;
  std::vector<Rational> att_prob(af.num_attacks());
  for (const auto& [src, dst, p] : attacks_) {
    att_prob[*af.find_attack(af.index_of(src), af.index_of(dst))] = p;
  }
  return Paf(std::move(af), std::move(arg_prob), std::move(att_prob));
}

}  // namespace pafdp
