#include "spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "errors.hpp"

namespace zsq {

namespace {

constexpr double kBracketLow = 0.0;
constexpr double kBracketHigh = 4.0;  // Gershgorin bound for the B matrix
constexpr double kWidthTarget = 1e-13;
constexpr int kMaxBisectionSteps = 200;

double bisect_kth(std::uint64_t n, std::uint64_t k) {
  double lo = kBracketLow;
  double hi = kBracketHigh;
  for (int step = 0; step < kMaxBisectionSteps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;  // float resolution reached
    if (sturm_count_below(n, mid) >= static_cast<std::int64_t>(k))
      hi = mid;
    else
      lo = mid;
    if (hi - lo <= kWidthTarget) return 0.5 * (lo + hi);
  }
  throw ConvergenceError("bisection failed to reach width target");
}

}  // namespace

ThetaGrid theta_grid(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("grid size must be positive");
  ThetaGrid grid;
  grid.n = n;
  grid.angles.reserve(n);
  const double half_pi = std::numbers::pi / 2.0;
  const double denom = static_cast<double>(2 * n + 1);
  for (std::uint64_t k = 1; k <= n; ++k)
    grid.angles.push_back(static_cast<double>(2 * k - 1) / denom * half_pi);
  return grid;
}

std::vector<double> closed_form_eigenvalues(std::uint64_t n, MatrixKind which) {
  const ThetaGrid grid = theta_grid(n);
  std::vector<double> eigs;
  eigs.reserve(n);
  for (const double theta : grid.angles) {
    const double s = std::sin(theta);
    eigs.push_back(4.0 * s * s);
  }
  if (which == MatrixKind::B) return eigs;  // ascending with theta
  for (double& e : eigs) e = 1.0 / e;
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

int sturm_count_below(std::uint64_t n, double x) {
  if (n == 0) throw InvalidArgument("matrix order must be positive");
  // Pivots of the LDL^T factorization of B - x I; the number of negative
  // pivots equals the number of eigenvalues below x. Near-zero pivots are
  // replaced by -pivmin, the LAPACK dstebz convention.
  const double pivmin = std::numeric_limits<double>::min() /
                        std::numeric_limits<double>::epsilon();
  int count = 0;
  double q = 1.0 - x;  // leading diagonal entry is 1
  if (std::fabs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::uint64_t i = 2; i <= n; ++i) {
    q = (2.0 - x) - 1.0 / q;  // remaining diagonal 2, squared off-diagonal 1
    if (std::fabs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> bisection_eigenvalues(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("matrix order must be positive");
  std::vector<double> eigs;
  eigs.reserve(n);
  for (std::uint64_t k = 1; k <= n; ++k) eigs.push_back(bisect_kth(n, k));
  return eigs;
}

SpectrumReport spectrum_report(std::uint64_t n) {
  SpectrumReport report;
  report.n = n;
  report.closed_form_eigs_b = closed_form_eigenvalues(n, MatrixKind::B);
  report.numeric_eigs_b = bisection_eigenvalues(n);
  double max_err = 0.0;
  for (std::uint64_t i = 0; i < n; ++i)
    max_err = std::max(
        max_err,
        std::fabs(report.closed_form_eigs_b[i] - report.numeric_eigs_b[i]));
  report.max_abs_error = max_err;
  return report;
}

}  // namespace zsq
