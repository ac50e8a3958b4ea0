#include "exact_matrices.hpp"

#include <string>

#include "errors.hpp"

namespace zsq {

namespace {

void require_positive_order(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("matrix order must be positive");
}

}  // namespace

StructuredMatrix::StructuredMatrix(std::uint64_t n, MatrixKind kind)
    : n_(n), kind_(kind) {
  require_positive_order(n);
}

ExactInt StructuredMatrix::entry(std::uint64_t i, std::uint64_t j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw InvalidArgument("matrix index out of range");
  if (kind_ == MatrixKind::A) {
    const std::uint64_t m = i > j ? i : j;
    return ExactInt(n_) + 1 - m;
  }
  if (i == j) return i == 1 ? 1 : 2;
  const std::uint64_t diff = i > j ? i - j : j - i;
  return diff == 1 ? -1 : 0;
}

StructuredMatrix build_matrix(std::uint64_t n, MatrixKind kind) {
  return StructuredMatrix(n, kind);
}

std::vector<std::vector<ExactInt>> dense(const StructuredMatrix& m) {
  const std::uint64_t n = m.order();
  std::vector<std::vector<ExactInt>> rows(n, std::vector<ExactInt>(n));
  for (std::uint64_t i = 1; i <= n; ++i)
    for (std::uint64_t j = 1; j <= n; ++j) rows[i - 1][j - 1] = m.entry(i, j);
  return rows;
}

bool verify_inverse(std::uint64_t n) {
  require_positive_order(n);
  const StructuredMatrix a = build_matrix(n, MatrixKind::A);
  // B is tridiagonal, so column j of A*B is
  //   -A(.,j-1) + d_j A(.,j) - A(.,j+1)   with d_1 = 1, d_j = 2 otherwise.
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::uint64_t j = 1; j <= n; ++j) {
      ExactInt s = a.entry(i, j) * (j == 1 ? 1 : 2);
      if (j > 1) s -= a.entry(i, j - 1);
      if (j < n) s -= a.entry(i, j + 1);
      if (s != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

std::vector<ExactInt> apply_a(std::uint64_t n, const std::vector<ExactInt>& v) {
  require_positive_order(n);
  if (v.size() != n) throw InvalidArgument("vector length must equal order");
  // 0-based: entry(i,j) = n - max(i,j), so
  //   (A v)_i = (n-i) * sum_{j<=i} v_j + sum_{j>i} (n-j) v_j.
  std::vector<ExactInt> w(n);
  ExactInt suffix = 0;
  for (std::uint64_t i = n; i-- > 0;) {
    w[i] = suffix;
    suffix += v[i] * static_cast<std::uint64_t>(n - i);
  }
  ExactInt prefix = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    prefix += v[i];
    w[i] += prefix * static_cast<std::uint64_t>(n - i);
  }
  return w;
}

TraceRecord trace_power(std::uint64_t n, unsigned p, std::uint64_t n_cap) {
  require_positive_order(n);
  if (p == 0) throw InvalidArgument("power must be positive");

  TraceRecord record;
  record.n = n;
  record.power = p;

  if (p == 1) {
    record.value = ExactInt(n) * (ExactInt(n) + 1) / 2;
    return record;
  }
  if (p == 2) {
    // By symmetry tr(A^2) is the sum of squared entries; exactly 2m-1
    // entries share the value n+1-m.
    ExactInt sum = 0;
    for (std::uint64_t m = 1; m <= n; ++m) {
      const ExactInt v = ExactInt(n) + 1 - m;
      sum += (ExactInt(2) * m - 1) * v * v;
    }
    record.value = sum;
    return record;
  }

  if (n > n_cap)
    throw CapExceeded("trace power " + std::to_string(p) + " requires n <= " +
                          std::to_string(n_cap) + ", got n = " +
                          std::to_string(n),
                      n_cap);

  // Diagonal of A^p accumulated column by column: (A^p)_jj = (A^p e_j)_j.
  ExactInt sum = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    std::vector<ExactInt> v(n, 0);
    v[j] = 1;
    for (unsigned step = 0; step < p; ++step) v = apply_a(n, v);
    sum += v[j];
  }
  record.value = sum;
  return record;
}

}  // namespace zsq
