#pragma once

#include "pafdp/paf.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pafdp {

/// Contents of a .paf file.
///
///   # comment
///   arg <name> <prob>
///   att <source> <target> <prob>
///   set [<name>...]          query set S (may be empty)
///   query <name>             query argument
///
/// Probabilities are decimal literals in (0,1] ("p/q" fractions are also
/// read). Endpoints must be declared by an earlier arg line.
struct PafDocument {
  std::vector<std::string> comments;  ///< full lines, including the leading '#'
  Paf paf;
  std::optional<std::vector<std::string>> query_set;
  std::optional<std::string> query_argument;
};

/// Throws InputError carrying "line L, column C" context.
PafDocument parse_paf(std::string_view text);

/// Canonical text: comments, args and attacks in canonical order, then the
/// set and query lines. parse_paf(serialize_paf(d)) reproduces d.
std::string serialize_paf(const PafDocument& doc);
std::string serialize_paf(const Paf& paf,
                          const std::optional<std::vector<std::string>>& query_set = std::nullopt,
                          const std::optional<std::string>& query_argument = std::nullopt);

/// Exact decimal when one exists, otherwise "p/q".
std::string probability_text(const Rational& p);

}  // namespace pafdp
