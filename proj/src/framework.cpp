#include "pafdp/framework.hpp"

#include "pafdp/errors.hpp"

#include <algorithm>
#include <cctype>

namespace pafdp {

bool is_valid_argument_name(std::string_view name) {
  if (name.empty() || name.front() == '#') return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c));
  });
}

ArgumentationFramework::ArgumentationFramework(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& attacks)
    : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_argument_name(names_[i])) {
      throw InputError("invalid argument name '" + names_[i] + "'");
    }
    if (i > 0 && names_[i] == names_[i - 1]) {
      throw InputError("duplicate argument '" + names_[i] + "'");
    }
    index_.emplace(names_[i], static_cast<ArgIndex>(i));
  }
  attacks_.reserve(attacks.size());
  for (const auto& [src, dst] : attacks) {
    attacks_.push_back({index_of(src), index_of(dst)});
  }
  std::sort(attacks_.begin(), attacks_.end());
  if (auto dup = std::adjacent_find(attacks_.begin(), attacks_.end()); dup != attacks_.end()) {
    throw InputError("duplicate attack (" + names_[dup->source] + "," + names_[dup->target] + ")");
  }
  incoming_.resize(names_.size());
  outgoing_.resize(names_.size());
  for (AttackIndex r = 0; r < attacks_.size(); ++r) {
    outgoing_[attacks_[r].source].push_back(r);
    incoming_[attacks_[r].target].push_back(r);
  }
}

std::optional<ArgIndex> ArgumentationFramework::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ArgIndex ArgumentationFramework::index_of(std::string_view name) const {
  if (auto a = find(name)) return *a;
  throw InputError("unknown argument '" + std::string(name) + "'");
}

std::optional<AttackIndex> ArgumentationFramework::find_attack(ArgIndex source,
                                                               ArgIndex target) const {
  const Attack key{source, target};
  auto it = std::lower_bound(attacks_.begin(), attacks_.end(), key);
  if (it == attacks_.end() || *it != key) return std::nullopt;
  return static_cast<AttackIndex>(it - attacks_.begin());
}

ArgSet ArgumentationFramework::full_set() const {
  ArgSet set(names_.size());
  set.set();
  return set;
}

ArgSet ArgumentationFramework::make_set(std::initializer_list<std::string_view> members) const {
  ArgSet set = empty_set();
  for (auto m : members) set.set(index_of(m));
  return set;
}

ArgSet ArgumentationFramework::make_set(std::span<const std::string> members) const {
  ArgSet set = empty_set();
  for (const auto& m : members) set.set(index_of(m));
  return set;
}

std::vector<std::string> ArgumentationFramework::names_of(const ArgSet& set) const {
  check_set(set);
  std::vector<std::string> out;
  for (auto i = set.find_first(); i != ArgSet::npos; i = set.find_next(i)) {
    out.push_back(names_[i]);
  }
  return out;
}

std::string ArgumentationFramework::format(const ArgSet& set) const {
  std::string out = "{";
  bool first = true;
  for (const auto& n : names_of(set)) {
    if (!first) out += ',';
    out += n;
    first = false;
  }
  return out + "}";
}

void ArgumentationFramework::check_set(const ArgSet& set) const {
  if (set.size() != names_.size()) {
    throw InputError("argument set built for a different framework");
  }
}

Subframework Subframework::full(const ArgumentationFramework& af) {
  Subframework f{af.full_set(), AttackSet(af.num_attacks())};
  f.attacks.set();
  return f;
}

}  // namespace pafdp
