#include "exact.hpp"

namespace zsq {

ExactInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) after each step
  }
  return result;
}

ExactInt pow_int(ExactInt base, unsigned exp) {
  ExactInt result = 1;
  while (exp != 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

}  // namespace zsq
