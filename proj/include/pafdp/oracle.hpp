#pragma once

#include "pafdp/deadline.hpp"
#include "pafdp/paf.hpp"
#include "pafdp/semantics.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pafdp {

inline constexpr std::size_t kDefaultUncertainCap = 30;

/// Walks F_P(paf) exactly once per member. Order: a binary counter over the
/// uncertain arguments (first argument = least significant bit); for each
/// argument choice, a nested counter over the uncertain attacks whose
/// endpoints are both present.
class EnumerationCursor {
 public:
  /// Throws CapacityError when paf has more than `cap` uncertain elements.
  explicit EnumerationCursor(const Paf& paf, std::size_t cap = kDefaultUncertainCap);

  /// Next subframework and its probability, or nullopt when exhausted.
  std::optional<std::pair<Subframework, Rational>> next();

 private:
  void load_argument_mask();

  const Paf* paf_;
  std::vector<ArgIndex> uncertain_args_;
  std::vector<AttackIndex> uncertain_atts_;  // all uncertain attacks
  std::vector<AttackIndex> live_atts_;       // uncertain attacks with both endpoints present
  std::uint64_t arg_mask_ = 0;
  std::uint64_t att_mask_ = 0;
  bool done_ = false;
  Subframework base_;
};

struct OracleOptions {
  std::size_t uncertain_cap = kDefaultUncertainCap;
  Deadline deadline;
};

/// Probability mass and cardinality of the qualifying subframeworks.
struct OracleTally {
  Rational probability;
  std::uint64_t count = 0;
  std::uint64_t total = 0;  ///< |F_P(paf)|
};

/// Every member of F_P(paf) with its probability.
std::vector<std::pair<Subframework, Rational>> enumerate_subframeworks(
    const Paf& paf, const OracleOptions& options = {});

/// Subframeworks in which S is a sigma-extension.
OracleTally ext_tally(const Paf& paf, Semantics sigma, const ArgSet& S,
                      const OracleOptions& options = {});
/// Subframeworks in which some sigma-extension contains a.
OracleTally acc_tally(const Paf& paf, Semantics sigma, ArgIndex a,
                      const OracleOptions& options = {});

Rational p_ext_oracle(const Paf& paf, Semantics sigma, const ArgSet& S,
                      const OracleOptions& options = {});
Rational p_acc_oracle(const Paf& paf, Semantics sigma, ArgIndex a,
                      const OracleOptions& options = {});
std::uint64_t count_ext(const Paf& paf, Semantics sigma, const ArgSet& S,
                        const OracleOptions& options = {});
std::uint64_t count_acc(const Paf& paf, Semantics sigma, ArgIndex a,
                        const OracleOptions& options = {});

}  // namespace pafdp
