#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pafdp {

using ArgIndex = std::uint32_t;
using AttackIndex = std::uint32_t;

/// Set of arguments, one bit per argument index.
using ArgSet = boost::dynamic_bitset<>;
/// Set of attacks, one bit per attack index.
using AttackSet = boost::dynamic_bitset<>;

struct Attack {
  ArgIndex source;
  ArgIndex target;
  friend auto operator<=>(const Attack&, const Attack&) = default;
};

/// True for tokens usable as argument names: non-empty, no whitespace,
/// no commas, not starting with '#'.
bool is_valid_argument_name(std::string_view name);

/// Dung-style argumentation framework (A, R).
///
/// Arguments are kept in lexicographic name order; an argument's index is its
/// rank in that order, and attacks are sorted by (source, target) index. Every
/// iteration and serialization in the library follows these orders.
class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;
  ArgumentationFramework(std::vector<std::string> names,
                         const std::vector<std::pair<std::string, std::string>>& attacks);

  std::size_t num_arguments() const { return names_.size(); }
  std::size_t num_attacks() const { return attacks_.size(); }

  const std::string& name(ArgIndex a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ArgIndex> find(std::string_view name) const;
  /// Throws InputError for unknown names.
  ArgIndex index_of(std::string_view name) const;

  const Attack& attack(AttackIndex r) const { return attacks_[r]; }
  std::span<const Attack> attacks() const { return attacks_; }
  std::optional<AttackIndex> find_attack(ArgIndex source, ArgIndex target) const;

  /// Indices of attacks targeting / leaving `a`.
  std::span<const AttackIndex> attacks_on(ArgIndex a) const { return incoming_[a]; }
  std::span<const AttackIndex> attacks_from(ArgIndex a) const { return outgoing_[a]; }

  ArgSet empty_set() const { return ArgSet(names_.size()); }
  ArgSet full_set() const;
  /// Throws InputError for unknown names.
  ArgSet make_set(std::initializer_list<std::string_view> members) const;
  ArgSet make_set(std::span<const std::string> members) const;
  std::vector<std::string> names_of(const ArgSet& set) const;
  /// "{a,c,e}"
  std::string format(const ArgSet& set) const;

  /// Throws InputError when `set` was built for a different argument count.
  void check_set(const ArgSet& set) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgIndex> index_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<AttackIndex>> incoming_;
  std::vector<std::vector<AttackIndex>> outgoing_;
};

using AF = ArgumentationFramework;

/// Concrete scenario (A', R') of a framework.
struct Subframework {
  ArgSet args;
  AttackSet attacks;

  static Subframework full(const ArgumentationFramework& af);
  friend bool operator==(const Subframework&, const Subframework&) = default;
};

}  // namespace pafdp
