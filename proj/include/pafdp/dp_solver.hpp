#pragma once

#include "pafdp/deadline.hpp"
#include "pafdp/paf.hpp"
#include "pafdp/semantics.hpp"
#include "pafdp/tree_decomposition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace pafdp {

enum class ArithmeticMode { Float, Rational };

/// When rows that coincide on (structure, witness) are summed.
///  - Eager: on every insertion, so every table has unique keys.
///  - ForgetOnly: only at forget nodes; introduce and join keep one row per
///    derivation, which is how the worked tables in the literature are laid
///    out. Results are identical, tables are larger.
enum class MergePolicy { Eager, ForgetOnly };

namespace dp {

/// Per-slot byte: bits 0-1 hold the label state, bits 2-3 the witness flags.
enum SlotBits : std::uint8_t {
  kAbsent = 0,
  kIn = 1,
  kOut = 2,
  kUndec = 3,
  kStateMask = 3,
  kOutWitness = 4,
  kUndecWitness = 8,
};

/// (structure, witness) of a row relative to a bag layout: one slot per bag
/// argument and one presence bit per bag attack.
struct RowKey {
  std::vector<std::uint8_t> slots;
  std::vector<std::uint64_t> attacks;

  bool attack_present(std::size_t i) const { return (attacks[i / 64] >> (i % 64)) & 1U; }
  void set_attack(std::size_t i) { attacks[i / 64] |= std::uint64_t{1} << (i % 64); }
  /// Same key with the witness flags cleared.
  RowKey structure() const;

  friend bool operator==(const RowKey&, const RowKey&) = default;
};

struct RowKeyHash {
  std::size_t operator()(const RowKey& key) const noexcept;
};

template <class Num>
struct Row {
  RowKey key;
  Num p;
};

template <class Num>
class Table {
 public:
  explicit Table(MergePolicy policy = MergePolicy::Eager) : policy_(policy) {}

  /// Adds p to the row with this key (Eager) or appends a row (ForgetOnly).
  void insert(RowKey key, Num p);
  /// Always sums into an existing row with the same key.
  void insert_merged(RowKey key, Num p);

  const std::vector<Row<Num>>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  MergePolicy policy() const { return policy_; }

 private:
  MergePolicy policy_;
  std::vector<Row<Num>> rows_;
  std::unordered_map<RowKey, std::size_t, RowKeyHash> index_;
};

/// Arguments of a bag and the attacks of R between them, both in canonical
/// order; slot i of a RowKey is args[i], attack bit j is attacks[j].
struct BagLayout {
  Bag args;
  std::vector<AttackIndex> attacks;

  static BagLayout of(const Bag& bag, const AF& af);
  std::optional<std::size_t> slot(ArgIndex a) const;
  std::optional<std::size_t> attack_slot(AttackIndex r) const;
  RowKey empty_key() const;
};

/// Marginals converted once into the working number type.
template <class Num>
struct ProbabilityModel {
  explicit ProbabilityModel(const Paf& paf);

  const Paf* paf;
  std::vector<Num> arg_p, arg_q;  ///< P(a), 1 - P(a)
  std::vector<Num> att_p, att_q;  ///< P(r), 1 - P(r)
};

/// What the tables are computed for.
struct Query {
  Semantics sigma = Semantics::Complete;  ///< adm, com or stb
  ArgSet S;
  MergePolicy merge = MergePolicy::Eager;
  /// Drop rows violating the acceptance filter while generating them rather
  /// than at the end of introduce. Must not change results.
  bool eager_acceptance = false;
};

template <class Num>
Table<Num> leaf_table(MergePolicy policy = MergePolicy::Eager);

template <class Num>
Table<Num> introduce(const Table<Num>& child, const BagLayout& child_bag, const BagLayout& bag,
                     ArgIndex a, const Query& query, const ProbabilityModel<Num>& model);

template <class Num>
Table<Num> forget(const Table<Num>& child, const BagLayout& child_bag, const BagLayout& bag,
                  ArgIndex a, const Query& query);

template <class Num>
Table<Num> join(const Table<Num>& left, const Table<Num>& right, const BagLayout& bag,
                const Query& query, const ProbabilityModel<Num>& model);

/// Bag-local probability mass shared by both sides of a join.
template <class Num>
Num common(const RowKey& key, const BagLayout& bag, const ProbabilityModel<Num>& model);

/// node=<id> F=(<args>;<atts>) L=(<I>;<O>;<U>) lw=(<out>;<und>) p=<value>
std::string format_row(int node_id, const RowKey& key, const BagLayout& bag, const AF& af,
                       const std::string& value);

}  // namespace dp

using Probability = std::variant<Rational, double>;

std::string fraction_or_decimal(const Probability& p);
std::string decimal_string(const Probability& p, int digits = 15);

struct SolveOptions {
  Semantics sigma = Semantics::Complete;
  ArithmeticMode mode = ArithmeticMode::Rational;
  MergePolicy merge = MergePolicy::Eager;
  bool eager_acceptance = false;
  bool trace = false;
  Deadline deadline;
};

struct NodeStats {
  int id;
  NodeKind kind;
  std::size_t bag_size;
  std::size_t rows;
};

struct SolveResult {
  Probability probability;
  std::vector<NodeStats> nodes;  ///< post-order
  std::vector<std::string> trace;  ///< per node, rows sorted; empty unless requested
  std::size_t max_rows = 0;
  std::size_t width = 0;
};

/// P-Ext over the supplied nice decomposition. Throws InputError for an
/// invalid decomposition, a semantics other than adm/com/stb, or a bad S.
SolveResult solve(const Paf& paf, const ArgSet& S, const NiceTreeDecomposition& td,
                  const SolveOptions& options);

/// Same, decomposing with `heuristic` first.
SolveResult solve(const Paf& paf, const ArgSet& S, const SolveOptions& options,
                  const Heuristic& heuristic = {});

/// solve() with the per-node table dump switched on.
SolveResult solve_with_trace(const Paf& paf, const ArgSet& S, const NiceTreeDecomposition& td,
                             SolveOptions options);

/// Convenience: P-Ext as a value.
Probability p_ext(const Paf& paf, Semantics sigma, const ArgSet& S,
                  ArithmeticMode mode = ArithmeticMode::Rational,
                  const std::optional<NiceTreeDecomposition>& td = std::nullopt);

}  // namespace pafdp
