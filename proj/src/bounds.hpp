#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exact.hpp"
#include "exact_matrices.hpp"

namespace zsq {

enum class EnclosureTarget { OddSum, FullZeta };

/// A pair of floating bounds certified to bracket a target quantity.
///
/// OddSum: brackets the finite partial sum sum_{k<=n} 1/(2k-1)^{2p}; both
/// bounds are exact rational multiples of pi^{2p} (the coefficients are
/// carried alongside), converted outward with 4 ulps of slack.
///
/// FullZeta: brackets the series limit zeta(2p). The lower bound is the
/// odd-sum lower bound rescaled by 4^p/(4^p - 1), exact at the rational
/// level; the upper bound adds a telescoping tail bound and a summation
/// error bound to the computed partial sum before rescaling, so that it
/// dominates the limit (the rescaled finite upper bound alone approaches
/// the limit from below and cannot).
struct ZetaEnclosure {
  unsigned p = 0;
  std::uint64_t n = 0;
  double lower = 0.0;
  double upper = 0.0;
  double width = 0.0;
  EnclosureTarget target = EnclosureTarget::OddSum;
  ExactRational lower_coeff;                 // lower ~ lower_coeff * pi^{2p}
  std::optional<ExactRational> upper_coeff;  // OddSum only
  bool extension = false;                    // p >= 3 trace-method extension
};

struct PartialSum {
  unsigned p = 0;
  std::uint64_t n = 0;
  double value = 0.0;
};

/// sum_{k=1..n} 1/(2k-1)^{2p}, compensated summation in ascending k.
PartialSum odd_partial_sum(std::uint64_t n, unsigned p);

ZetaEnclosure odd_sum_enclosure(std::uint64_t n, unsigned p,
                                std::uint64_t n_cap = kDefaultTraceCap);

ZetaEnclosure zeta_enclosure(std::uint64_t n, unsigned p,
                             std::uint64_t n_cap = kDefaultTraceCap);

struct SqueezeRow {
  std::uint64_t n = 0;
  PartialSum partial;
  ZetaEnclosure enclosure;  // OddSum target
  bool contains_partial = false;
};

/// One row per ladder entry: the partial sum, its odd-sum enclosure, and
/// whether the partial sum lies strictly inside it. Ladder must ascend.
std::vector<SqueezeRow> squeeze_table(unsigned p,
                                      const std::vector<std::uint64_t>& ladder,
                                      std::uint64_t n_cap = kDefaultTraceCap);

/// Powers of ten: up to 1e6 for p = 1, 1e4 for p = 2, the trace cap beyond.
std::vector<std::uint64_t> default_ladder(unsigned p,
                                          std::uint64_t n_cap = kDefaultTraceCap);

}  // namespace zsq
