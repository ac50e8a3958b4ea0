#pragma once

#include <cstdint>
#include <vector>

#include "exact.hpp"
#include "exact_matrices.hpp"

namespace zsq {

struct TraceTerm {
  unsigned j = 0;       // trace power in the expansion
  ExactInt binomial;    // C(p, j)
  ExactInt trace;       // tr(A^j), with tr(A^0) = n
};

/// S_p(n) = sum_k cot^{2p}(theta_k), computed exactly from matrix traces:
/// cot^2(theta_k) = 4 mu_k - 1 with mu_k the eigenvalues of the kind-A
/// matrix, so S_p(n) = sum_j C(p,j) 4^j (-1)^{p-j} tr(A^j).
struct PowerSumReport {
  std::uint64_t n = 0;
  unsigned p = 0;
  ExactRational value;
  std::vector<TraceTerm> trace_terms;
  // p >= 3: same trace method, but with no independent polynomial identity
  // to check the value against. Reports surface this flag.
  bool extension = false;
};

PowerSumReport power_sum(std::uint64_t n, unsigned p,
                         std::uint64_t n_cap = kDefaultTraceCap);

/// Exact check of S_1(n) = 2n^2 + n for every n <= n_max.
bool verify_cot_square_identity(std::uint64_t n_max);

/// Exact check of 3 S_2(n) = 8n^4 + 16n^3 + 4n^2 - n for every n <= n_max.
bool verify_cot_fourth_identity(std::uint64_t n_max);

}  // namespace zsq
