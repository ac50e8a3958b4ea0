#include "determinant.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "spectrum.hpp"

namespace zsq {

namespace {

constexpr double kZeroTolerance = 1e-9;
constexpr double kSeparationFloor = 1e-12;
constexpr double kCosineFloor = 1e-12;

void require_angle(std::uint64_t n, double theta) {
  if (n == 0) throw InvalidArgument("order must be positive");
  if (!(theta > 0.0) || !(theta < std::numbers::pi / 2.0))
    throw InvalidArgument("theta must lie strictly inside (0, pi/2)");
}

}  // namespace

double det_recurrence(std::uint64_t n, double theta) {
  require_angle(n, theta);
  const double d1 = 1.0 - 2.0 * std::cos(2.0 * theta);
  if (n == 1) return d1;
  const double d2 = d1 + 2.0 * std::cos(4.0 * theta);
  if (n == 2) return d2;
  const double s = std::sin(theta);
  const double coeff = 4.0 * s * s - 2.0;
  double prev = d1;
  double curr = d2;
  for (std::uint64_t m = 3; m <= n; ++m) {
    const double next = coeff * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double det_closed_form(std::uint64_t n, double theta) {
  require_angle(n, theta);
  const double c = std::cos(theta);
  if (std::fabs(c) < kCosineFloor)
    throw PoleError("cos(theta) below pole floor in closed-form determinant");
  const double value =
      std::cos(static_cast<double>(2 * n + 1) * theta) / c;
  return (n % 2 == 0) ? value : -value;
}

double det_cosine_sum(std::uint64_t n, double theta) {
  require_angle(n, theta);
  double sum = 1.0;
  double sign = -1.0;
  for (std::uint64_t j = 1; j <= n; ++j) {
    sum += sign * 2.0 * std::cos(2.0 * static_cast<double>(j) * theta);
    sign = -sign;
  }
  return sum;
}

bool verify_zero_set(std::uint64_t n) {
  const ThetaGrid grid = theta_grid(n);
  double prev_eig = 0.0;
  for (std::uint64_t k = 0; k < n; ++k) {
    const double theta = grid.angles[k];
    if (std::fabs(det_closed_form(n, theta)) > kZeroTolerance) return false;
    const double s = std::sin(theta);
    const double eig = 4.0 * s * s;
    if (k > 0 && eig - prev_eig <= kSeparationFloor) return false;
    prev_eig = eig;
  }
  return true;
}

}  // namespace zsq
