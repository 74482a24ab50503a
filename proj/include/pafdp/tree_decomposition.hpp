#pragma once

#include "pafdp/framework.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pafdp {

/// Bag contents, sorted ascending by argument index, no duplicates.
using Bag = std::vector<ArgIndex>;

struct TdNode {
  int id = 0;
  Bag bag;
  std::vector<std::size_t> children;  ///< positions in TreeDecomposition::nodes
};

/// Rooted tree decomposition of the undirected attack graph.
struct TreeDecomposition {
  std::vector<TdNode> nodes;
  std::size_t root = 0;
};

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  int id = 0;
  NodeKind kind = NodeKind::Leaf;
  ArgIndex arg = 0;  ///< introduced / forgotten argument
  Bag bag;
  std::vector<std::size_t> children;
};

/// Nice decomposition with empty root and leaf bags.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  std::size_t root = 0;

  /// Node positions, children before parents.
  std::vector<std::size_t> post_order() const;
  TreeDecomposition plain() const;
};

/// max |bag| - 1, clamped at 0.
std::size_t width(const TreeDecomposition& td);
std::size_t width(const NiceTreeDecomposition& td);

struct Violation {
  std::string condition;  ///< "vertex-coverage", "edge-coverage", "connectedness", ...
  std::string witness;    ///< offending argument, attack or node
  std::string describe() const { return condition + ": " + witness; }
};

/// Empty when td is a valid decomposition of af's undirected attack graph.
std::vector<Violation> validate(const TreeDecomposition& td, const AF& af);
/// Same three conditions plus the nice node-type rules.
std::vector<Violation> validate(const NiceTreeDecomposition& td, const AF& af);

struct Heuristic {
  enum class Kind { MinFill, MinDegree, GivenOrder };
  Kind kind = Kind::MinFill;
  std::vector<ArgIndex> order;         ///< GivenOrder: full elimination order
  std::optional<std::uint64_t> seed;   ///< randomizes tie-breaks when set

  static Heuristic min_fill() { return {}; }
  static Heuristic min_degree() { return {Kind::MinDegree, {}, std::nullopt}; }
  static Heuristic given(std::vector<ArgIndex> order) {
    return {Kind::GivenOrder, std::move(order), std::nullopt};
  }
};

/// Elimination-ordering decomposition. Throws InputError for a given order
/// that is not a permutation of the arguments.
TreeDecomposition decompose(const AF& af, const Heuristic& heuristic = {});

/// Elimination order the heuristic would use (exposed for tests/tools).
std::vector<ArgIndex> elimination_order(const AF& af, const Heuristic& heuristic);

/// Nice form with the same width. Throws InputError if td is invalid for af.
NiceTreeDecomposition make_nice(const TreeDecomposition& td, const AF& af);

/// Rewrites bags from framework `from` to framework `to` by name, dropping
/// arguments that `to` does not have.
TreeDecomposition project(const TreeDecomposition& td, const AF& from, const AF& to);

}  // namespace pafdp
