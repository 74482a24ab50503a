#include "pafdp/preprocess.hpp"

#include "pafdp/errors.hpp"

namespace pafdp {

ForcedLabeling forcing_step(const Paf& paf, const ForcedLabeling& current) {
  const auto& af = paf.framework();
  ForcedLabeling next{af.empty_set(), af.empty_set(), current.iterations + 1};
  for (ArgIndex a = 0; a < af.num_arguments(); ++a) {
    bool all_attackers_out = true;
    bool certain_in_attacker = false;
    for (AttackIndex r : af.attacks_on(a)) {
      const ArgIndex b = af.attack(r).source;
      all_attackers_out &= current.forced_out.test(b);
      certain_in_attacker |=
          paf.arg_certain(b) && paf.attack_certain(r) && current.forced_in.test(b);
    }
    if (all_attackers_out) next.forced_in.set(a);
    if (certain_in_attacker) next.forced_out.set(a);
  }
  return next;
}

ForcedLabeling forced_labeling(const Paf& paf) {
  const auto& af = paf.framework();
  ForcedLabeling current{af.empty_set(), af.empty_set(), 0};
  while (true) {
    ForcedLabeling next = forcing_step(paf, current);
    if (next.forced_in == current.forced_in && next.forced_out == current.forced_out) {
      return current;
    }
    current = std::move(next);
  }
}

ExtSimplification simplify_for_ext(const Paf& paf, const ArgSet& S) {
  return simplify_for_ext(paf, S, forced_labeling(paf));
}

ExtSimplification simplify_for_ext(const Paf& paf, const ArgSet& S, const ForcedLabeling& forced) {
  const auto& af = paf.framework();
  af.check_set(S);
  if (S.intersects(forced.forced_out)) return ZeroProbability{};

  ArgSet removed = af.empty_set();
  Rational multiplier = 1;
  const ArgSet outside_in = forced.forced_in - S;
  for (auto a = outside_in.find_first(); a != ArgSet::npos; a = outside_in.find_next(a)) {
    if (paf.arg_certain(static_cast<ArgIndex>(a))) return ZeroProbability{};
    removed.set(a);
    multiplier *= 1 - paf.arg_probability(static_cast<ArgIndex>(a));
  }
  ReducedInstance out{removed.any() ? paf.without(removed) : paf, multiplier, removed,
                      af.names_of(S)};
  return out;
}

AccSimplification simplify_for_acc(const Paf& paf, ArgIndex a) {
  if (a >= paf.framework().num_arguments()) throw InputError("argument index out of range");
  return forced_labeling(paf).forced_out.test(a) ? AccSimplification::Zero
                                                 : AccSimplification::Unchanged;
}

}  // namespace pafdp
