#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zsq {

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when an exact matrix-power computation would exceed the
// configured order cap (applies to powers >= 3 only).
struct CapExceeded : std::domain_error {
  std::uint64_t limit;
  CapExceeded(const std::string& what, std::uint64_t limit_value)
      : std::domain_error(what), limit(limit_value) {}
};

// |cos(theta)| below the admissible floor for the closed-form determinant.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Bisection failed to reach its width target within the iteration limit;
// indicates a solver bug, not a data condition.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zsq
