#include "pafdp/oracle.hpp"

#include "pafdp/errors.hpp"

#include <string>

namespace pafdp {

EnumerationCursor::EnumerationCursor(const Paf& paf, std::size_t cap) : paf_(&paf) {
  const auto& af = paf.framework();
  for (ArgIndex a = 0; a < af.num_arguments(); ++a) {
    if (!paf.arg_certain(a)) uncertain_args_.push_back(a);
  }
  for (AttackIndex r = 0; r < af.num_attacks(); ++r) {
    if (!paf.attack_certain(r)) uncertain_atts_.push_back(r);
  }
  const std::size_t uncertain = uncertain_args_.size() + uncertain_atts_.size();
  if (uncertain > cap || uncertain > 62) {
    throw CapacityError("enumeration refused: " + std::to_string(uncertain) +
                        " uncertain elements exceed the cap of " + std::to_string(cap));
  }
  load_argument_mask();
}

void EnumerationCursor::load_argument_mask() {
  const auto& af = paf_->framework();
  base_.args = af.full_set();
  for (std::size_t i = 0; i < uncertain_args_.size(); ++i) {
    if (!((arg_mask_ >> i) & 1U)) base_.args.reset(uncertain_args_[i]);
  }
  base_.attacks = AttackSet(af.num_attacks());
  live_atts_.clear();
  for (AttackIndex r = 0; r < af.num_attacks(); ++r) {
    const auto& att = af.attack(r);
    if (!base_.args.test(att.source) || !base_.args.test(att.target)) continue;
    if (paf_->attack_certain(r)) {
      base_.attacks.set(r);
    } else {
      live_atts_.push_back(r);
    }
  }
  att_mask_ = 0;
}

std::optional<std::pair<Subframework, Rational>> EnumerationCursor::next() {
  if (done_) return std::nullopt;
  Subframework f = base_;
  for (std::size_t i = 0; i < live_atts_.size(); ++i) {
    if ((att_mask_ >> i) & 1U) f.attacks.set(live_atts_[i]);
  }
  Rational p = paf_->subframework_probability(f);

  if (++att_mask_ == (std::uint64_t{1} << live_atts_.size())) {
    if (++arg_mask_ == (std::uint64_t{1} << uncertain_args_.size())) {
      done_ = true;
    } else {
      load_argument_mask();
    }
  }
  return std::make_pair(std::move(f), std::move(p));
}

std::vector<std::pair<Subframework, Rational>> enumerate_subframeworks(
    const Paf& paf, const OracleOptions& options) {
  std::vector<std::pair<Subframework, Rational>> out;
  EnumerationCursor cursor(paf, options.uncertain_cap);
  while (auto item = cursor.next()) {
    if ((out.size() & 0xFFF) == 0) options.deadline.check();
    out.push_back(std::move(*item));
  }
  return out;
}

namespace {

template <class Accept>
OracleTally tally(const Paf& paf, const OracleOptions& options, Accept&& accept) {
  OracleTally result;
  EnumerationCursor cursor(paf, options.uncertain_cap);
  while (auto item = cursor.next()) {
    if ((result.total & 0x3FF) == 0) options.deadline.check();
    ++result.total;
    if (accept(item->first)) {
      ++result.count;
      result.probability += item->second;
    }
  }
  return result;
}

}  // namespace

OracleTally ext_tally(const Paf& paf, Semantics sigma, const ArgSet& S,
                      const OracleOptions& options) {
  const auto& af = paf.framework();
  af.check_set(S);
  return tally(paf, options, [&](const Subframework& f) {
    if (sigma == Semantics::Grounded) return S.is_subset_of(f.args) && grounded_extension(af, f) == S;
    return is_extension(af, f, sigma, S);
  });
}

OracleTally acc_tally(const Paf& paf, Semantics sigma, ArgIndex a, const OracleOptions& options) {
  const auto& af = paf.framework();
  if (a >= af.num_arguments()) throw InputError("argument index out of range");
  return tally(paf, options,
               [&](const Subframework& f) { return credulously_accepted(af, f, sigma, a); });
}

Rational p_ext_oracle(const Paf& paf, Semantics sigma, const ArgSet& S,
                      const OracleOptions& options) {
  return ext_tally(paf, sigma, S, options).probability;
}

Rational p_acc_oracle(const Paf& paf, Semantics sigma, ArgIndex a, const OracleOptions& options) {
  return acc_tally(paf, sigma, a, options).probability;
}

std::uint64_t count_ext(const Paf& paf, Semantics sigma, const ArgSet& S,
                        const OracleOptions& options) {
  return ext_tally(paf, sigma, S, options).count;
}

std::uint64_t count_acc(const Paf& paf, Semantics sigma, ArgIndex a,
                        const OracleOptions& options) {
  return acc_tally(paf, sigma, a, options).count;
}

}  // namespace pafdp
