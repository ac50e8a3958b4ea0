#include "power_sums.hpp"

#include "errors.hpp"

namespace zsq {

PowerSumReport power_sum(std::uint64_t n, unsigned p, std::uint64_t n_cap) {
  if (n == 0) throw InvalidArgument("grid size must be positive");
  if (p == 0) throw InvalidArgument("power must be positive");

  PowerSumReport report;
  report.n = n;
  report.p = p;
  report.extension = p >= 3;
  report.trace_terms.reserve(p + 1);

  ExactInt total = 0;
  for (unsigned j = 0; j <= p; ++j) {
    TraceTerm term;
    term.j = j;
    term.binomial = binomial(p, j);
    term.trace = j == 0 ? ExactInt(n) : trace_power(n, j, n_cap).value;
    ExactInt contribution = term.binomial * pow_int(4, j) * term.trace;
    if ((p - j) % 2 == 1) contribution = -contribution;
    total += contribution;
    report.trace_terms.push_back(std::move(term));
  }
  report.value = ExactRational(total);
  return report;
}

bool verify_cot_square_identity(std::uint64_t n_max) {
  if (n_max == 0) throw InvalidArgument("n_max must be positive");
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const ExactRational expected(ExactInt(2) * n * n + n);
    if (power_sum(n, 1).value != expected) return false;
  }
  return true;
}

bool verify_cot_fourth_identity(std::uint64_t n_max) {
  if (n_max == 0) throw InvalidArgument("n_max must be positive");
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const ExactInt nn(n);
    const ExactInt rhs = 8 * nn * nn * nn * nn + 16 * nn * nn * nn +
                         4 * nn * nn - nn;
    if (ExactRational(3) * power_sum(n, 2).value != ExactRational(rhs))
      return false;
  }
  return true;
}

}  // namespace zsq
