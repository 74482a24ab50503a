#pragma once

#include <stdexcept>
#include <string>

namespace pafdp {

/// Malformed or inconsistent input: unknown names, bad probabilities,
/// invalid decompositions, syntax errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource limit (uncertain-element cap, time budget) was hit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pafdp
