#pragma once

#include <cstdint>
#include <vector>

#include "exact.hpp"

namespace zsq {

enum class MatrixKind { A, B };

/// Symmetric integer matrix stored implicitly by its entry formula.
///
/// Kind A is the dense n x n matrix with entry(i,j) = n+1-max(i,j);
/// kind B is its tridiagonal inverse, diagonal (1,2,...,2) with -1 on the
/// sub/superdiagonals. Public indices are 1-based.
class StructuredMatrix {
 public:
  StructuredMatrix(std::uint64_t n, MatrixKind kind);

  std::uint64_t order() const { return n_; }
  MatrixKind kind() const { return kind_; }
  ExactInt entry(std::uint64_t i, std::uint64_t j) const;

 private:
  std::uint64_t n_;
  MatrixKind kind_;
};

struct TraceRecord {
  std::uint64_t n = 0;
  unsigned power = 0;
  ExactInt value;
};

// Order cap for exact matrix-power traces; applies to power >= 3 only,
// where the computation is iterative matrix-vector work.
inline constexpr std::uint64_t kDefaultTraceCap = 512;

StructuredMatrix build_matrix(std::uint64_t n, MatrixKind kind);

/// Materializes all n^2 entries; intended for oracle tests at small n.
std::vector<std::vector<ExactInt>> dense(const StructuredMatrix& m);

/// True iff A_n * B_n equals the identity under exact integer arithmetic.
bool verify_inverse(std::uint64_t n);

/// Exact trace of the p-th power of the kind-A matrix. p = 1 and p = 2 use
/// closed forms; p >= 3 runs exact repeated multiplication and enforces
/// n <= n_cap.
TraceRecord trace_power(std::uint64_t n, unsigned p,
                        std::uint64_t n_cap = kDefaultTraceCap);

/// w = A_n v in O(n) exact operations (prefix/suffix sums of the entry
/// formula). v must have length n.
std::vector<ExactInt> apply_a(std::uint64_t n, const std::vector<ExactInt>& v);

}  // namespace zsq
