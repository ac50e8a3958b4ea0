#pragma once

namespace zsq {

// Kahan compensated accumulator. Error after n additions is bounded by
// 2*eps*sum(|x_i|) + O(n*eps^2), independent of n for n << 1/eps.
struct KahanAccumulator {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) {
    const double y = value - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }
};

}  // namespace zsq
