#pragma once

#include "pafdp/errors.hpp"

#include <chrono>
#include <optional>

namespace pafdp {

/// Cooperative wall-clock budget. Long-running loops call check() at
/// natural boundaries (table construction, enumeration blocks).
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(std::chrono::duration<double> budget)
      : until_(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget)) {}

  bool expired() const { return until_ && Clock::now() >= *until_; }
  void check() const {
    if (expired()) throw CapacityError("time budget exhausted");
  }

 private:
  std::optional<Clock::time_point> until_;
};

}  // namespace pafdp
