#pragma once

#include "pafdp/paf.hpp"

#include <variant>

namespace pafdp {

/// Least fixed point of the forcing operator: an argument is forced in when
/// every attacker (over all of R, certain or not) is forced out; it is forced
/// out when a certain argument that is forced in attacks it with a certain
/// attack.
struct ForcedLabeling {
  ArgSet forced_in;
  ArgSet forced_out;
  std::size_t iterations = 0;
};

ForcedLabeling forced_labeling(const Paf& paf);

/// One application of the forcing operator to a partial labeling.
ForcedLabeling forcing_step(const Paf& paf, const ForcedLabeling& current);

struct ZeroProbability {};

/// P-Ext_com(paf, S) = multiplier * P-Ext_com(reduced, S).
struct ReducedInstance {
  Paf reduced;
  Rational multiplier;
  ArgSet removed;  ///< over the original framework
  std::vector<std::string> query;  ///< S by name (valid in both frameworks)
};

using ExtSimplification = std::variant<ZeroProbability, ReducedInstance>;

/// Complete-semantics simplification for P-Ext.
ExtSimplification simplify_for_ext(const Paf& paf, const ArgSet& S);
ExtSimplification simplify_for_ext(const Paf& paf, const ArgSet& S, const ForcedLabeling& forced);

enum class AccSimplification { Zero, Unchanged };

AccSimplification simplify_for_acc(const Paf& paf, ArgIndex a);

}  // namespace pafdp
