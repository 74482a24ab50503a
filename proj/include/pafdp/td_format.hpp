#pragma once

#include "pafdp/tree_decomposition.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace pafdp {

// Line-oriented text format ('#' starts a comment line):
//   bag <id> <arg>...
//   edge <parentId> <childId>
//   type <id> leaf|intro:<arg>|forget:<arg>|join     (nice decompositions only)
// The root is the unique node without a parent. A file with type lines is
// read as a nice decomposition and must type every node.

using AnyDecomposition = std::variant<TreeDecomposition, NiceTreeDecomposition>;

/// Throws InputError with a line number on malformed input.
AnyDecomposition parse_td(std::string_view text, const AF& af);

std::string serialize_td(const TreeDecomposition& td, const AF& af);
std::string serialize_td(const NiceTreeDecomposition& td, const AF& af);

}  // namespace pafdp
