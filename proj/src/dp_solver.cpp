#include "pafdp/dp_solver.hpp"

#include "pafdp/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace pafdp {
namespace dp {

namespace {

template <class Num>
Num convert(const Rational& value);

template <>
Rational convert<Rational>(const Rational& value) {
  return value;
}

template <>
double convert<double>(const Rational& value) {
  return value.get_d();
}

std::uint8_t state_of(std::uint8_t slot) { return slot & kStateMask; }

std::size_t attack_words(std::size_t count) { return (count + 63) / 64; }

/// Incident attack of the introduced argument, as seen from the new bag.
struct Incident {
  std::size_t attack_slot;
  AttackIndex attack;
  std::size_t source_slot;
  std::size_t target_slot;
  bool certain;
};

bool passes_acceptance(const RowKey& key, const BagLayout& bag, const ArgSet& S) {
  for (std::size_t i = 0; i < bag.args.size(); ++i) {
    const bool in_query = S.test(bag.args[i]);
    const bool labeled_in = state_of(key.slots[i]) == kIn;
    if (in_query != labeled_in) return false;
  }
  return true;
}

}  // namespace

RowKey RowKey::structure() const {
  RowKey out = *this;
  for (auto& s : out.slots) s &= kStateMask;
  return out;
}

std::size_t RowKeyHash::operator()(const RowKey& key) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto s : key.slots) h = (h ^ s) * 1099511628211ULL;
  for (auto w : key.attacks) h = (h ^ w) * 1099511628211ULL ^ (w >> 29);
  return static_cast<std::size_t>(h);
}

template <class Num>
void Table<Num>::insert(RowKey key, Num p) {
  if (policy_ == MergePolicy::Eager) {
    insert_merged(std::move(key), std::move(p));
  } else {
    rows_.push_back({std::move(key), std::move(p)});
  }
}

template <class Num>
void Table<Num>::insert_merged(RowKey key, Num p) {
  auto [it, fresh] = index_.try_emplace(key, rows_.size());
  if (fresh) {
    rows_.push_back({std::move(key), std::move(p)});
  } else {
    rows_[it->second].p += p;
  }
}

BagLayout BagLayout::of(const Bag& bag, const AF& af) {
  BagLayout layout{bag, {}};
  for (AttackIndex r = 0; r < af.num_attacks(); ++r) {
    const auto& att = af.attack(r);
    if (std::binary_search(bag.begin(), bag.end(), att.source) &&
        std::binary_search(bag.begin(), bag.end(), att.target)) {
      layout.attacks.push_back(r);
    }
  }
  return layout;
}

std::optional<std::size_t> BagLayout::slot(ArgIndex a) const {
  auto it = std::lower_bound(args.begin(), args.end(), a);
  if (it == args.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - args.begin());
}

std::optional<std::size_t> BagLayout::attack_slot(AttackIndex r) const {
  auto it = std::lower_bound(attacks.begin(), attacks.end(), r);
  if (it == attacks.end() || *it != r) return std::nullopt;
  return static_cast<std::size_t>(it - attacks.begin());
}

RowKey BagLayout::empty_key() const {
  return {std::vector<std::uint8_t>(args.size(), kAbsent),
          std::vector<std::uint64_t>(attack_words(attacks.size()), 0)};
}

template <class Num>
ProbabilityModel<Num>::ProbabilityModel(const Paf& p) : paf(&p) {
  const auto& af = p.framework();
  for (ArgIndex a = 0; a < af.num_arguments(); ++a) {
    arg_p.push_back(convert<Num>(p.arg_probability(a)));
    arg_q.push_back(convert<Num>(1 - p.arg_probability(a)));
  }
  for (AttackIndex r = 0; r < af.num_attacks(); ++r) {
    att_p.push_back(convert<Num>(p.attack_probability(r)));
    att_q.push_back(convert<Num>(1 - p.attack_probability(r)));
  }
}

template <class Num>
Table<Num> leaf_table(MergePolicy policy) {
  Table<Num> table(policy);
  table.insert(RowKey{}, Num(1));
  return table;
}

template <class Num>
Table<Num> introduce(const Table<Num>& child, const BagLayout& child_bag, const BagLayout& bag,
                     ArgIndex a, const Query& query, const ProbabilityModel<Num>& model) {
  const Paf& paf = *model.paf;
  const AF& af = paf.framework();
  const std::size_t pos = *bag.slot(a);

  std::vector<std::size_t> attack_map;  // child attack bit -> bag attack bit
  attack_map.reserve(child_bag.attacks.size());
  for (auto r : child_bag.attacks) attack_map.push_back(*bag.attack_slot(r));

  std::vector<Incident> incident;
  for (std::size_t j = 0; j < bag.attacks.size(); ++j) {
    const auto r = bag.attacks[j];
    const auto& att = af.attack(r);
    if (att.source != a && att.target != a) continue;
    incident.push_back({j, r, *bag.slot(att.source), *bag.slot(att.target), paf.attack_certain(r)});
  }

  const bool a_certain = paf.arg_certain(a);
  const bool allow_undec = query.sigma != Semantics::Stable;
  Table<Num> out(query.merge);
  auto emit = [&](RowKey key, Num p) {
    if (query.eager_acceptance && !passes_acceptance(key, bag, query.S)) return;
    out.insert(std::move(key), std::move(p));
  };

  std::vector<const Incident*> live;
  std::vector<const Incident*> optional;
  for (const auto& row : child.rows()) {
    RowKey base = bag.empty_key();
    for (std::size_t i = 0; i < child_bag.args.size(); ++i) {
      base.slots[i < pos ? i : i + 1] = row.key.slots[i];
    }
    for (std::size_t j = 0; j < child_bag.attacks.size(); ++j) {
      if (row.key.attack_present(j)) base.set_attack(attack_map[j]);
    }

    if (!a_certain) emit(base, row.p * model.arg_q[a]);

    // Attacks between a and present bag arguments (a's own slot is the only
    // absent one at this point, so a self-attack is always live).
    live.clear();
    optional.clear();
    for (const auto& inc : incident) {
      const std::size_t other = inc.source_slot == pos ? inc.target_slot : inc.source_slot;
      if (other != pos && state_of(base.slots[other]) == kAbsent) continue;
      live.push_back(&inc);
      if (!inc.certain) optional.push_back(&inc);
    }

    const std::uint64_t subsets = std::uint64_t{1} << optional.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      Num p = row.p * model.arg_p[a];
      for (std::size_t k = 0; k < optional.size(); ++k) {
        const auto r = optional[k]->attack;
        p *= ((mask >> k) & 1U) ? model.att_p[r] : model.att_q[r];
      }
      for (std::uint8_t label : {kIn, kOut, kUndec}) {
        if (label == kUndec && !allow_undec) continue;
        RowKey key = base;
        key.slots[pos] = label;
        bool ok = true;
        std::size_t k = 0;
        for (const Incident* inc : live) {
          bool present = true;
          if (!inc->certain) present = (mask >> k++) & 1U;
          if (!present) continue;
          key.set_attack(inc->attack_slot);
          const std::uint8_t src = state_of(key.slots[inc->source_slot]);
          const std::uint8_t dst = state_of(key.slots[inc->target_slot]);
          if (inc->source_slot == inc->target_slot) {
            if (src == kIn) ok = false;
          } else if ((src == kIn && dst != kOut) || (dst == kIn && src != kOut)) {
            ok = false;
          }
          if (!ok) break;
          if (src == kIn) key.slots[inc->target_slot] |= kOutWitness;
          if (src == kUndec) key.slots[inc->target_slot] |= kUndecWitness;
        }
        if (ok) emit(std::move(key), p);
      }
    }
  }

  if (query.eager_acceptance) return out;
  Table<Num> accepted(query.merge);
  for (const auto& row : out.rows()) {
    if (passes_acceptance(row.key, bag, query.S)) accepted.insert(row.key, row.p);
  }
  return accepted;
}

template <class Num>
Table<Num> forget(const Table<Num>& child, const BagLayout& child_bag, const BagLayout& bag,
                  ArgIndex a, const Query& query) {
  const std::size_t pos = *child_bag.slot(a);
  std::vector<std::optional<std::size_t>> attack_map;
  attack_map.reserve(child_bag.attacks.size());
  for (auto r : child_bag.attacks) attack_map.push_back(bag.attack_slot(r));

  Table<Num> out(query.merge);
  for (const auto& row : child.rows()) {
    const std::uint8_t slot = row.key.slots[pos];
    switch (state_of(slot)) {
      case kOut:
        if (!(slot & kOutWitness)) continue;
        break;
      case kUndec:
        if (query.sigma == Semantics::Stable) continue;
        if (query.sigma == Semantics::Complete && !(slot & kUndecWitness)) continue;
        break;
      default:
        break;
    }
    RowKey key = bag.empty_key();
    for (std::size_t i = 0, k = 0; i < child_bag.args.size(); ++i) {
      if (i != pos) key.slots[k++] = row.key.slots[i];
    }
    for (std::size_t j = 0; j < child_bag.attacks.size(); ++j) {
      if (attack_map[j] && row.key.attack_present(j)) key.set_attack(*attack_map[j]);
    }
    out.insert_merged(std::move(key), row.p);
  }
  return out;
}

template <class Num>
Num common(const RowKey& key, const BagLayout& bag, const ProbabilityModel<Num>& model) {
  const AF& af = model.paf->framework();
  Num c(1);
  for (std::size_t i = 0; i < bag.args.size(); ++i) {
    const ArgIndex a = bag.args[i];
    c *= state_of(key.slots[i]) == kAbsent ? model.arg_q[a] : model.arg_p[a];
  }
  for (std::size_t j = 0; j < bag.attacks.size(); ++j) {
    const auto r = bag.attacks[j];
    const auto& att = af.attack(r);
    if (state_of(key.slots[*bag.slot(att.source)]) == kAbsent ||
        state_of(key.slots[*bag.slot(att.target)]) == kAbsent) {
      continue;
    }
    c *= key.attack_present(j) ? model.att_p[r] : model.att_q[r];
  }
  return c;
}

template <class Num>
Table<Num> join(const Table<Num>& left, const Table<Num>& right, const BagLayout& bag,
                const Query& query, const ProbabilityModel<Num>& model) {
  std::unordered_map<RowKey, std::vector<std::size_t>, RowKeyHash> by_structure;
  for (std::size_t i = 0; i < right.rows().size(); ++i) {
    by_structure[right.rows()[i].key.structure()].push_back(i);
  }
  Table<Num> out(query.merge);
  for (const auto& lrow : left.rows()) {
    const RowKey structure = lrow.key.structure();
    auto it = by_structure.find(structure);
    if (it == by_structure.end()) continue;
    const Num shared = common(structure, bag, model);
    if (shared == Num(0)) {
      throw std::logic_error("join: zero common probability for a reachable structure");
    }
    for (std::size_t idx : it->second) {
      const auto& rrow = right.rows()[idx];
      RowKey key = lrow.key;
      for (std::size_t s = 0; s < key.slots.size(); ++s) key.slots[s] |= rrow.key.slots[s];
      Num p = lrow.p * rrow.p;
      p /= shared;
      out.insert(std::move(key), std::move(p));
    }
  }
  return out;
}

std::string format_row(int node_id, const RowKey& key, const BagLayout& bag, const AF& af,
                       const std::string& value) {
  std::string present, attacks, in, out, undec, out_w, und_w;
  auto append = [](std::string& list, const std::string& item) {
    if (!list.empty()) list += ',';
    list += item;
  };
  for (std::size_t i = 0; i < bag.args.size(); ++i) {
    const std::string& name = af.name(bag.args[i]);
    const std::uint8_t slot = key.slots[i];
    switch (state_of(slot)) {
      case kAbsent: continue;
      case kIn: append(in, name); break;
      case kOut: append(out, name); break;
      default: append(undec, name); break;
    }
    append(present, name);
    if (slot & kOutWitness) append(out_w, name);
    if (slot & kUndecWitness) append(und_w, name);
  }
  for (std::size_t j = 0; j < bag.attacks.size(); ++j) {
    if (!key.attack_present(j)) continue;
    const auto& att = af.attack(bag.attacks[j]);
    append(attacks, af.name(att.source) + ">" + af.name(att.target));
  }
  return "node=" + std::to_string(node_id) + " F=(" + present + ";" + attacks + ") L=(" + in +
         ";" + out + ";" + undec + ") lw=(" + out_w + ";" + und_w + ") p=" + value;
}

template class Table<Rational>;
template class Table<double>;
template struct ProbabilityModel<Rational>;
template struct ProbabilityModel<double>;
template Table<Rational> leaf_table<Rational>(MergePolicy);
template Table<double> leaf_table<double>(MergePolicy);
template Table<Rational> introduce(const Table<Rational>&, const BagLayout&, const BagLayout&,
                                   ArgIndex, const Query&, const ProbabilityModel<Rational>&);
template Table<double> introduce(const Table<double>&, const BagLayout&, const BagLayout&,
                                 ArgIndex, const Query&, const ProbabilityModel<double>&);
template Table<Rational> forget(const Table<Rational>&, const BagLayout&, const BagLayout&,
                                ArgIndex, const Query&);
template Table<double> forget(const Table<double>&, const BagLayout&, const BagLayout&, ArgIndex,
                              const Query&);
template Table<Rational> join(const Table<Rational>&, const Table<Rational>&, const BagLayout&,
                              const Query&, const ProbabilityModel<Rational>&);
template Table<double> join(const Table<double>&, const Table<double>&, const BagLayout&,
                            const Query&, const ProbabilityModel<double>&);
template Rational common(const RowKey&, const BagLayout&, const ProbabilityModel<Rational>&);
template double common(const RowKey&, const BagLayout&, const ProbabilityModel<double>&);

}  // namespace dp

std::string fraction_or_decimal(const Probability& p) {
  if (const auto* r = std::get_if<Rational>(&p)) return fraction_string(*r);
  return significant_decimal(std::get<double>(p), 17);
}

std::string decimal_string(const Probability& p, int digits) {
  return std::visit([&](const auto& v) { return significant_decimal(v, digits); }, p);
}

namespace {

template <class Num>
std::string value_string(const Num& value) {
  if constexpr (std::is_same_v<Num, Rational>) {
    return fraction_string(value);
  } else {
    return significant_decimal(value, 17);
  }
}

template <class Num>
SolveResult run(const Paf& paf, const ArgSet& S, const NiceTreeDecomposition& td,
                const SolveOptions& options) {
  const AF& af = paf.framework();
  const dp::ProbabilityModel<Num> model(paf);
  const dp::Query query{options.sigma, S, options.merge, options.eager_acceptance};

  SolveResult result;
  result.width = width(td);
  std::vector<std::optional<dp::Table<Num>>> tables(td.nodes.size());
  std::vector<dp::BagLayout> layouts(td.nodes.size());
  for (std::size_t i = 0; i < td.nodes.size(); ++i) {
    layouts[i] = dp::BagLayout::of(td.nodes[i].bag, af);
  }

  for (std::size_t t : td.post_order()) {
    options.deadline.check();
    const auto& node = td.nodes[t];
    switch (node.kind) {
      case NodeKind::Leaf:
        tables[t] = dp::leaf_table<Num>(options.merge);
        break;
      case NodeKind::Introduce: {
        const auto c = node.children[0];
        tables[t] = dp::introduce(*tables[c], layouts[c], layouts[t], node.arg, query, model);
        tables[c].reset();
        break;
      }
      case NodeKind::Forget: {
        const auto c = node.children[0];
        tables[t] = dp::forget(*tables[c], layouts[c], layouts[t], node.arg, query);
        tables[c].reset();
        break;
      }
      case NodeKind::Join: {
        const auto l = node.children[0], r = node.children[1];
        tables[t] = dp::join(*tables[l], *tables[r], layouts[t], query, model);
        tables[l].reset();
        tables[r].reset();
        break;
      }
    }
    const auto& table = *tables[t];
    result.nodes.push_back({node.id, node.kind, node.bag.size(), table.size()});
    result.max_rows = std::max(result.max_rows, table.size());
    if (options.trace) {
      std::vector<std::string> lines;
      for (const auto& row : table.rows()) {
        lines.push_back(dp::format_row(node.id, row.key, layouts[t], af, value_string(row.p)));
      }
      std::sort(lines.begin(), lines.end());
      result.trace.insert(result.trace.end(), lines.begin(), lines.end());
    }
  }

  Num total(0);
  for (const auto& row : tables[td.root]->rows()) total += row.p;
  result.probability = Probability(std::in_place_type<Num>, total);
  return result;
}

void check_query(const Paf& paf, const ArgSet& S, Semantics sigma) {
  paf.framework().check_set(S);
  if (sigma != Semantics::Admissible && sigma != Semantics::Complete &&
      sigma != Semantics::Stable) {
    throw InputError("the DP solver supports adm, com and stb only");
  }
}

}  // namespace

SolveResult solve(const Paf& paf, const ArgSet& S, const NiceTreeDecomposition& td,
                  const SolveOptions& options) {
  check_query(paf, S, options.sigma);
  if (auto violations = validate(td, paf.framework()); !violations.empty()) {
    throw InputError("invalid nice tree decomposition: " + violations.front().describe());
  }
  if (options.mode == ArithmeticMode::Rational) return run<Rational>(paf, S, td, options);
  return run<double>(paf, S, td, options);
}

SolveResult solve(const Paf& paf, const ArgSet& S, const SolveOptions& options,
                  const Heuristic& heuristic) {
  check_query(paf, S, options.sigma);
  const auto& af = paf.framework();
  return solve(paf, S, make_nice(decompose(af, heuristic), af), options);
}

SolveResult solve_with_trace(const Paf& paf, const ArgSet& S, const NiceTreeDecomposition& td,
                             SolveOptions options) {
  options.trace = true;
  return solve(paf, S, td, options);
}

Probability p_ext(const Paf& paf, Semantics sigma, const ArgSet& S, ArithmeticMode mode,
                  const std::optional<NiceTreeDecomposition>& td) {
  SolveOptions options;
  options.sigma = sigma;
  options.mode = mode;
  if (td) return solve(paf, S, *td, options).probability;
  return solve(paf, S, options).probability;
}

}  // namespace pafdp
