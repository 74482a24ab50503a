#pragma once

#include "pafdp/framework.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace pafdp {

enum class Semantics { ConflictFree, Admissible, Complete, Stable, Grounded };

/// Short name: cf, adm, com, stb, grd.
std::string_view short_name(Semantics sigma);
/// Long name: conflict-free, admissible, complete, stable, grounded.
std::string_view long_name(Semantics sigma);
/// Accepts both short and long names.
std::optional<Semantics> parse_semantics(std::string_view text);

enum class Label : std::uint8_t { In, Out, Undec };

/// Possibly partial labeling, indexed by argument.
using Labeling = std::vector<std::optional<Label>>;

// Predicates evaluated inside a subframework `f` of `af`. An attack counts
// only when it is in f.attacks and both endpoints are in f.args; arguments
// of S outside f.args make every predicate except conflict-freeness false.

bool is_conflict_free(const AF& af, const Subframework& f, const ArgSet& S);
bool defends(const AF& af, const Subframework& f, const ArgSet& S, ArgIndex a);
bool is_extension(const AF& af, const Subframework& f, Semantics sigma, const ArgSet& S);
/// Least fixed point of the characteristic function.
ArgSet grounded_extension(const AF& af, const Subframework& f);
/// All sigma-extensions by enumeration over subsets of f.args; grd is the
/// subset-minimal complete extension. Sorted by bitset order.
std::vector<ArgSet> extensions(const AF& af, const Subframework& f, Semantics sigma);
/// True when some sigma-extension of f contains a (a must be in f.args).
bool credulously_accepted(const AF& af, const Subframework& f, Semantics sigma, ArgIndex a);

// Whole-framework forms.

bool is_conflict_free(const AF& af, const ArgSet& S);
bool defends(const AF& af, const ArgSet& S, ArgIndex a);
std::vector<ArgSet> extensions(const AF& af, Semantics sigma);

/// L_S: I for S, O for arguments attacked by S, U otherwise.
/// Throws InputError if S is not conflict-free.
Labeling labeling_of_set(const AF& af, const ArgSet& S);
/// S_L = {a | L(a) = I}. Throws InputError if L is partial.
ArgSet set_of_labeling(const AF& af, const Labeling& L);
/// Labeling-based semantics check for total L; sigma in {adm, com, stb}.
bool is_labeling(const AF& af, Semantics sigma, const Labeling& L);
/// All total labelings satisfying the labeling-based definition, by 3^n
/// enumeration; sigma in {adm, com, stb}.
std::vector<Labeling> labelings(const AF& af, Semantics sigma);

}  // namespace pafdp
