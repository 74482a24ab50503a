#include "pafdp/semantics.hpp"

#include "pafdp/errors.hpp"

#include <algorithm>
#include <array>

namespace pafdp {

namespace {

bool attack_present(const AF& af, const Subframework& f, AttackIndex r) {
  const auto& att = af.attack(r);
  return f.attacks.test(r) && f.args.test(att.source) && f.args.test(att.target);
}

/// Arguments of f attacked by some member of S (within f).
ArgSet attacked_by(const AF& af, const Subframework& f, const ArgSet& S) {
  ArgSet out = af.empty_set();
  for (AttackIndex r = 0; r < af.num_attacks(); ++r) {
    const auto& att = af.attack(r);
    if (S.test(att.source) && attack_present(af, f, r)) out.set(att.target);
  }
  return out;
}

bool defends_with(const AF& af, const Subframework& f, const ArgSet& S_plus, ArgIndex a) {
  for (AttackIndex r : af.attacks_on(a)) {
    if (attack_present(af, f, r) && !S_plus.test(af.attack(r).source)) return false;
  }
  return true;
}

bool check_sigma(const AF& af, const Subframework& f, Semantics sigma, const ArgSet& S) {
  if (!S.is_subset_of(f.args)) return false;
  if (!is_conflict_free(af, f, S)) return false;
  if (sigma == Semantics::ConflictFree) return true;
  const ArgSet S_plus = attacked_by(af, f, S);
  if (sigma == Semantics::Stable) return (S | S_plus) == f.args;
  for (auto a = S.find_first(); a != ArgSet::npos; a = S.find_next(a)) {
    if (!defends_with(af, f, S_plus, static_cast<ArgIndex>(a))) return false;
  }
  if (sigma == Semantics::Admissible) return true;
  for (auto a = f.args.find_first(); a != ArgSet::npos; a = f.args.find_next(a)) {
    if (!S.test(a) && defends_with(af, f, S_plus, static_cast<ArgIndex>(a))) return false;
  }
  if (sigma == Semantics::Complete) return true;
  return S == grounded_extension(af, f);
}

/// Depth-first enumeration of conflict-free subsets of f.args; `visit` gets
/// every conflict-free set containing `required` and returns true to stop.
template <class Visit>
bool enumerate_conflict_free(const AF& af, const Subframework& f, const ArgSet& required,
                             Visit&& visit) {
  std::vector<ArgIndex> order;
  for (auto a = f.args.find_first(); a != ArgSet::npos; a = f.args.find_next(a)) {
    order.push_back(static_cast<ArgIndex>(a));
  }
  ArgSet current = af.empty_set();
  auto compatible = [&](ArgIndex a) {
    for (AttackIndex r : af.attacks_from(a)) {
      const auto t = af.attack(r).target;
      if (attack_present(af, f, r) && (t == a || current.test(t))) return false;
    }
    for (AttackIndex r : af.attacks_on(a)) {
      if (attack_present(af, f, r) && current.test(af.attack(r).source)) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return visit(current);
    const ArgIndex a = order[depth];
    if (compatible(a)) {
      current.set(a);
      if (self(self, depth + 1)) return true;
      current.reset(a);
    }
    if (!required.test(a)) return self(self, depth + 1);
    return false;
  };
  return recurse(recurse, 0);
}

constexpr std::array<Semantics, 5> kAllSemantics{Semantics::ConflictFree, Semantics::Admissible,
                                                 Semantics::Complete, Semantics::Stable,
                                                 Semantics::Grounded};

}  // namespace

std::string_view short_name(Semantics sigma) {
  switch (sigma) {
    case Semantics::ConflictFree: return "cf";
    case Semantics::Admissible: return "adm";
    case Semantics::Complete: return "com";
    case Semantics::Stable: return "stb";
    case Semantics::Grounded: return "grd";
  }
  return "?";
}

std::string_view long_name(Semantics sigma) {
  switch (sigma) {
    case Semantics::ConflictFree: return "conflict-free";
    case Semantics::Admissible: return "admissible";
    case Semantics::Complete: return "complete";
    case Semantics::Stable: return "stable";
    case Semantics::Grounded: return "grounded";
  }
  return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
  for (auto sigma : kAllSemantics) {
    if (text == short_name(sigma) || text == long_name(sigma)) return sigma;
  }
  return std::nullopt;
}

bool is_conflict_free(const AF& af, const Subframework& f, const ArgSet& S) {
  af.check_set(S);
  for (AttackIndex r = 0; r < af.num_attacks(); ++r) {
    const auto& att = af.attack(r);
    if (S.test(att.source) && S.test(att.target) && attack_present(af, f, r)) return false;
  }
  return true;
}

bool defends(const AF& af, const Subframework& f, const ArgSet& S, ArgIndex a) {
  af.check_set(S);
  if (a >= af.num_arguments()) throw InputError("argument index out of range");
  return defends_with(af, f, attacked_by(af, f, S), a);
}

bool is_extension(const AF& af, const Subframework& f, Semantics sigma, const ArgSet& S) {
  af.check_set(S);
  return check_sigma(af, f, sigma, S);
}

ArgSet grounded_extension(const AF& af, const Subframework& f) {
  ArgSet current = af.empty_set();
  while (true) {
    const ArgSet S_plus = attacked_by(af, f, current);
    ArgSet next = af.empty_set();
    for (auto a = f.args.find_first(); a != ArgSet::npos; a = f.args.find_next(a)) {
      if (defends_with(af, f, S_plus, static_cast<ArgIndex>(a))) next.set(a);
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<ArgSet> extensions(const AF& af, const Subframework& f, Semantics sigma) {
  std::vector<ArgSet> out;
  const Semantics filter = sigma == Semantics::Grounded ? Semantics::Complete : sigma;
  enumerate_conflict_free(af, f, af.empty_set(), [&](const ArgSet& S) {
    if (check_sigma(af, f, filter, S)) out.push_back(S);
    return false;
  });
  if (sigma == Semantics::Grounded) {
    std::vector<ArgSet> minimal;
    for (const auto& S : out) {
      const bool has_smaller = std::any_of(out.begin(), out.end(), [&](const ArgSet& T) {
        return T != S && T.is_subset_of(S);
      });
      if (!has_smaller) minimal.push_back(S);
    }
    out = std::move(minimal);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool credulously_accepted(const AF& af, const Subframework& f, Semantics sigma, ArgIndex a) {
  if (!f.args.test(a)) return false;
  if (sigma == Semantics::Grounded) return grounded_extension(af, f).test(a);
  ArgSet required = af.empty_set();
  required.set(a);
  return enumerate_conflict_free(af, f, required, [&](const ArgSet& S) {
    return S.test(a) && check_sigma(af, f, sigma, S);
  });
}

bool is_conflict_free(const AF& af, const ArgSet& S) {
  return is_conflict_free(af, Subframework::full(af), S);
}

bool defends(const AF& af, const ArgSet& S, ArgIndex a) {
  return defends(af, Subframework::full(af), S, a);
}

std::vector<ArgSet> extensions(const AF& af, Semantics sigma) {
  return extensions(af, Subframework::full(af), sigma);
}

Labeling labeling_of_set(const AF& af, const ArgSet& S) {
  if (!is_conflict_free(af, S)) {
    throw InputError("labeling_of_set: " + af.format(S) + " is not conflict-free");
  }
  Labeling L(af.num_arguments(), Label::Undec);
  for (const auto& att : af.attacks()) {
    if (S.test(att.source)) L[att.target] = Label::Out;
  }
  for (auto a = S.find_first(); a != ArgSet::npos; a = S.find_next(a)) L[a] = Label::In;
  return L;
}

ArgSet set_of_labeling(const AF& af, const Labeling& L) {
  if (L.size() != af.num_arguments()) throw InputError("labeling size mismatch");
  ArgSet S = af.empty_set();
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (!L[a]) throw InputError("set_of_labeling needs a total labeling");
    if (*L[a] == Label::In) S.set(a);
  }
  return S;
}

bool is_labeling(const AF& af, Semantics sigma, const Labeling& L) {
  if (L.size() != af.num_arguments()) return false;
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (!L[a]) return false;
    bool attacker_in = false, attacker_undec = false, attacker_not_out = false;
    for (AttackIndex r : af.attacks_on(static_cast<ArgIndex>(a))) {
      const Label lb = *L[af.attack(r).source];
      attacker_in |= lb == Label::In;
      attacker_undec |= lb == Label::Undec;
      attacker_not_out |= lb != Label::Out;
    }
    switch (*L[a]) {
      case Label::In:
        if (attacker_not_out) return false;
        break;
      case Label::Out:
        if (!attacker_in) return false;
        break;
      case Label::Undec:
        if (sigma == Semantics::Stable) return false;
        if (sigma == Semantics::Complete && (attacker_in || !attacker_undec)) return false;
        break;
    }
  }
  return true;
}

std::vector<Labeling> labelings(const AF& af, Semantics sigma) {
  if (sigma != Semantics::Admissible && sigma != Semantics::Complete &&
      sigma != Semantics::Stable) {
    throw InputError("labelings are defined for adm, com and stb only");
  }
  std::vector<Labeling> out;
  const std::size_t n = af.num_arguments();
  Labeling L(n, Label::In);
  while (true) {
    if (is_labeling(af, sigma, L)) out.push_back(L);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (*L[i] == Label::Undec) {
        L[i] = Label::In;
        continue;
      }
      L[i] = *L[i] == Label::In ? Label::Out : Label::Undec;
      break;
    }
    if (i == n) break;
  }
  return out;
}

}  // namespace pafdp
