#include "bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "errors.hpp"
#include "kahan.hpp"
#include "power_sums.hpp"

namespace zsq {

namespace {

constexpr int kOutwardUlps = 4;

double step_up(double x, int ulps) {
  for (int i = 0; i < ulps; ++i)
    x = std::nextafter(x, std::numeric_limits<double>::infinity());
  return x;
}

double step_down(double x, int ulps) {
  for (int i = 0; i < ulps; ++i)
    x = std::nextafter(x, -std::numeric_limits<double>::infinity());
  return x;
}

double ipow(double base, unsigned exp) {
  double result = 1.0;
  while (exp != 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

// coeff * pi^e evaluated in long double; the combined conversion error is
// well under one double ulp for e <= 128, so the outward slack dominates it.
double rational_times_pi_pow(const ExactRational& coeff, unsigned e,
                             bool round_up) {
  const long double value =
      coeff.convert_to<long double>() *
      std::pow(std::numbers::pi_v<long double>, static_cast<int>(e));
  const double d = static_cast<double>(value);
  return round_up ? step_up(d, kOutwardUlps) : step_down(d, kOutwardUlps);
}

ExactRational zeta_rescale(unsigned p) {
  const ExactInt four_p = pow_int(4, p);
  return ExactRational(four_p, four_p - 1);
}

}  // namespace

PartialSum odd_partial_sum(std::uint64_t n, unsigned p) {
  if (n == 0) throw InvalidArgument("partial sum length must be positive");
  if (p == 0) throw InvalidArgument("power must be positive");
  KahanAccumulator acc;
  for (std::uint64_t k = 1; k <= n; ++k)
    acc.add(1.0 / ipow(static_cast<double>(2 * k - 1), 2 * p));
  return PartialSum{p, n, acc.sum};
}

ZetaEnclosure odd_sum_enclosure(std::uint64_t n, unsigned p,
                                std::uint64_t n_cap) {
  if (n == 0) throw InvalidArgument("grid size must be positive");
  if (p == 0) throw InvalidArgument("power must be positive");

  // From cot^2(theta) < 1/theta^2 < cot^2(theta) + 1 on the grid:
  //   (pi/(2(2n+1)))^{2p} S_p(n) < sum_{k<=n} 1/(2k-1)^{2p}
  //                              < (pi/(2(2n+1)))^{2p} 4^p tr(A^p).
  const ExactInt sum_value =
      numerator(power_sum(n, p, n_cap).value);  // integral by construction
  const ExactInt trace_value = trace_power(n, p, n_cap).value;
  const ExactInt denom = pow_int(ExactInt(2) * (2 * ExactInt(n) + 1), 2 * p);

  ZetaEnclosure enc;
  enc.p = p;
  enc.n = n;
  enc.target = EnclosureTarget::OddSum;
  enc.extension = p >= 3;
  enc.lower_coeff = ExactRational(sum_value, denom);
  enc.upper_coeff = ExactRational(pow_int(4, p) * trace_value, denom);
  enc.lower = rational_times_pi_pow(enc.lower_coeff, 2 * p, false);
  enc.upper = rational_times_pi_pow(*enc.upper_coeff, 2 * p, true);
  enc.width = enc.upper - enc.lower;
  return enc;
}

ZetaEnclosure zeta_enclosure(std::uint64_t n, unsigned p, std::uint64_t n_cap) {
  ZetaEnclosure odd = odd_sum_enclosure(n, p, n_cap);
  const ExactRational rescale = zeta_rescale(p);

  ZetaEnclosure enc;
  enc.p = p;
  enc.n = n;
  enc.target = EnclosureTarget::FullZeta;
  enc.extension = odd.extension;
  enc.lower_coeff = rescale * odd.lower_coeff;
  enc.lower = rational_times_pi_pow(enc.lower_coeff, 2 * p, false);

  // Upper bound on the limit: partial sum + tail. For k > n,
  //   (2k-1)^{-2p} <= (2n+1)^{2-2p} / (4k(k-1)),
  // and sum_{k>n} 1/(4k(k-1)) telescopes to 1/(4n), giving the rational
  // tail bound 1/(4n (2n+1)^{2p-2}).
  const double partial = odd_partial_sum(n, p).value;
  const double summation_error =
      16.0 * std::numeric_limits<double>::epsilon() * partial;
  const ExactRational tail_bound(
      ExactInt(1), ExactInt(4) * n * pow_int(ExactInt(2) * n + 1, 2 * p - 2));
  const double tail =
      step_up(static_cast<double>(tail_bound.convert_to<long double>()), 2);
  const long double inner = static_cast<long double>(partial) +
                            static_cast<long double>(summation_error) +
                            static_cast<long double>(tail);
  enc.upper = step_up(
      static_cast<double>(rescale.convert_to<long double>() * inner),
      kOutwardUlps);
  enc.width = enc.upper - enc.lower;
  return enc;
}

std::vector<SqueezeRow> squeeze_table(unsigned p,
                                      const std::vector<std::uint64_t>& ladder,
                                      std::uint64_t n_cap) {
  if (ladder.empty()) throw InvalidArgument("ladder must be non-empty");
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i] <= ladder[i - 1])
      throw InvalidArgument("ladder must be strictly ascending");

  std::vector<SqueezeRow> rows;
  rows.reserve(ladder.size());
  for (const std::uint64_t n : ladder) {
    SqueezeRow row;
    row.n = n;
    row.partial = odd_partial_sum(n, p);
    row.enclosure = odd_sum_enclosure(n, p, n_cap);
    row.contains_partial = row.enclosure.lower < row.partial.value &&
                           row.partial.value < row.enclosure.upper;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::uint64_t> default_ladder(unsigned p, std::uint64_t n_cap) {
  std::uint64_t top = 1000000;
  if (p == 2) top = 10000;
  if (p >= 3) top = n_cap;
  std::vector<std::uint64_t> ladder;
  for (std::uint64_t n = 10; n <= top; n *= 10) ladder.push_back(n);
  return ladder;
}

}  // namespace zsq
