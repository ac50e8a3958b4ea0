#pragma once

#include <cstdint>
#include <vector>

#include "exact_matrices.hpp"

namespace zsq {

/// The angles theta_k = ((2k-1)/(2n+1)) * (pi/2), k = 1..n, ascending.
struct ThetaGrid {
  std::uint64_t n = 0;
  std::vector<double> angles;
};

ThetaGrid theta_grid(std::uint64_t n);

/// Closed-form eigenvalues, ascending. Kind B: 4 sin^2(theta_k).
/// Kind A: the reciprocals 1/(4 sin^2(theta_k)), sorted (not index-reversed).
std::vector<double> closed_form_eigenvalues(std::uint64_t n, MatrixKind which);

/// Number of eigenvalues of the tridiagonal kind-B matrix strictly below x,
/// by the Sturm pivot recurrence.
int sturm_count_below(std::uint64_t n, double x);

/// All n eigenvalues of the kind-B matrix via Sturm-sequence bisection on
/// the Gershgorin bracket [0, 4], ascending, each bracketed to absolute
/// width <= 1e-12. Independent of the closed form.
std::vector<double> bisection_eigenvalues(std::uint64_t n);

struct SpectrumReport {
  std::uint64_t n = 0;
  std::vector<double> closed_form_eigs_b;
  std::vector<double> numeric_eigs_b;
  double max_abs_error = 0.0;
};

SpectrumReport spectrum_report(std::uint64_t n);

}  // namespace zsq
