#pragma once

#include <cstdint>

namespace zsq {

// D_n(theta) = det(4 sin^2(theta) I_n - B_n), evaluated three ways that are
// provably equal on 0 < theta < pi/2:
//   - the tridiagonal three-term recurrence,
//   - the alternating cosine sum 1 + 2 sum_{j=1..n} (-1)^j cos(2 j theta),
//   - the closed form (-1)^n cos((2n+1) theta) / cos(theta).

/// Three-term recurrence D_n = (4 sin^2(theta) - 2) D_{n-1} - D_{n-2} with
/// bases D_1 = 1 - 2cos(2theta), D_2 = 1 - 2cos(2theta) + 2cos(4theta).
/// Requires 0 < theta < pi/2.
double det_recurrence(std::uint64_t n, double theta);

/// (-1)^n cos((2n+1) theta) / cos(theta). Requires 0 < theta < pi/2 and
/// |cos(theta)| >= 1e-12 (PoleError otherwise).
double det_closed_form(std::uint64_t n, double theta);

/// Alternating cosine-sum representation; same domain as the recurrence.
double det_cosine_sum(std::uint64_t n, double theta);

/// True iff the closed form vanishes (|.| <= 1e-9) at every grid angle
/// theta_k and the n values 4 sin^2(theta_k) are pairwise separated by
/// more than 1e-12.
bool verify_zero_set(std::uint64_t n);

}  // namespace zsq
