#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "exact_matrices.hpp"
#include "kahan.hpp"
#include "spectrum.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

// Eigenvalues of [[1,-1],[-1,2]]: roots of x^2 - 3x + 1.
const double kGoldenLow = (3.0 - std::sqrt(5.0)) / 2.0;   // 0.3819660112...
const double kGoldenHigh = (3.0 + std::sqrt(5.0)) / 2.0;  // 2.6180339887...

}  // namespace

TEST_CASE("theta grid examples") {
  const auto g1 = zsq::theta_grid(1);
  REQUIRE(g1.angles.size() == 1);
  CHECK(g1.angles[0] == doctest::Approx(kPi / 6).epsilon(1e-15));

  const auto g2 = zsq::theta_grid(2);
  CHECK(g2.angles[0] == doctest::Approx(kPi / 10).epsilon(1e-15));
  CHECK(g2.angles[1] == doctest::Approx(3 * kPi / 10).epsilon(1e-15));

  const auto g3 = zsq::theta_grid(3);
  CHECK(g3.angles[0] == doctest::Approx(kPi / 14).epsilon(1e-15));
  CHECK(g3.angles[1] == doctest::Approx(3 * kPi / 14).epsilon(1e-15));
  CHECK(g3.angles[2] == doctest::Approx(5 * kPi / 14).epsilon(1e-15));

  CHECK_THROWS_AS(zsq::theta_grid(0), zsq::InvalidArgument);
}

TEST_CASE("theta grid is strictly ascending inside (0, pi/2)") {
  for (const std::uint64_t n : {1ULL, 2ULL, 17ULL, 256ULL}) {
    const auto grid = zsq::theta_grid(n);
    REQUIRE(grid.angles.size() == n);
    CHECK(grid.angles.front() > 0.0);
    CHECK(grid.angles.back() < kPi / 2);
    for (std::uint64_t k = 1; k < n; ++k)
      CHECK(grid.angles[k] > grid.angles[k - 1]);
  }
}

TEST_CASE("closed-form eigenvalue examples") {
  const auto a1 = zsq::closed_form_eigenvalues(1, zsq::MatrixKind::A);
  REQUIRE(a1.size() == 1);
  CHECK(a1[0] == doctest::Approx(1.0).epsilon(1e-14));

  const auto b2 = zsq::closed_form_eigenvalues(2, zsq::MatrixKind::B);
  CHECK(b2[0] == doctest::Approx(kGoldenLow).epsilon(1e-12));
  CHECK(b2[1] == doctest::Approx(kGoldenHigh).epsilon(1e-12));

  // (3-sqrt5)/2 and (3+sqrt5)/2 are mutual reciprocals, so the kind-A list
  // coincides with the kind-B list at n = 2.
  const auto a2 = zsq::closed_form_eigenvalues(2, zsq::MatrixKind::A);
  CHECK(a2[0] == doctest::Approx(kGoldenLow).epsilon(1e-12));
  CHECK(a2[1] == doctest::Approx(kGoldenHigh).epsilon(1e-12));
}

TEST_CASE("bisection solver examples") {
  const auto e1 = zsq::bisection_eigenvalues(1);
  REQUIRE(e1.size() == 1);
  CHECK(std::fabs(e1[0] - 1.0) <= 1e-12);

  const auto e2 = zsq::bisection_eigenvalues(2);
  CHECK(std::fabs(e2[0] - kGoldenLow) <= 1e-12);
  CHECK(std::fabs(e2[1] - kGoldenHigh) <= 1e-12);

  const auto closed = zsq::closed_form_eigenvalues(16, zsq::MatrixKind::B);
  const auto numeric = zsq::bisection_eigenvalues(16);
  for (std::size_t i = 0; i < 16; ++i)
    CHECK(std::fabs(closed[i] - numeric[i]) <= 1e-10);

  CHECK_THROWS_AS(zsq::bisection_eigenvalues(0), zsq::InvalidArgument);
}

TEST_CASE("spectrum report error bounds") {
  CHECK(zsq::spectrum_report(1).max_abs_error <= 1e-12);
  CHECK(zsq::spectrum_report(8).max_abs_error <= 1e-10);
  CHECK(zsq::spectrum_report(64).max_abs_error <= 1e-10);
}

TEST_CASE("eigenvalues live strictly inside (0, 4)") {
  for (const std::uint64_t n : {1ULL, 8ULL, 64ULL}) {
    const auto report = zsq::spectrum_report(n);
    REQUIRE(report.closed_form_eigs_b.size() == n);
    REQUIRE(report.numeric_eigs_b.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(report.closed_form_eigs_b[i] > 0.0);
      CHECK(report.closed_form_eigs_b[i] < 4.0);
      CHECK(report.numeric_eigs_b[i] > 0.0);
      CHECK(report.numeric_eigs_b[i] < 4.0);
    }
  }
}

TEST_CASE("distinctness: gaps exceed 1e-10 up to n = 256") {
  for (const std::uint64_t n : {2ULL, 64ULL, 256ULL}) {
    const auto eigs = zsq::closed_form_eigenvalues(n, zsq::MatrixKind::B);
    for (std::size_t i = 1; i < eigs.size(); ++i)
      CHECK(eigs[i] - eigs[i - 1] > 1e-10);
  }
}

TEST_CASE("reciprocity between the two spectra") {
  for (const std::uint64_t n : {1ULL, 2ULL, 7ULL, 64ULL}) {
    const auto a = zsq::closed_form_eigenvalues(n, zsq::MatrixKind::A);
    const auto b = zsq::closed_form_eigenvalues(n, zsq::MatrixKind::B);
    // Sorting the reciprocals reverses the order.
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::fabs(a[i] * b[n - 1 - i] - 1.0) <= 1e-14);
  }
}

TEST_CASE("eigenvalue sum matches the exact trace to 1e-12 relative") {
  for (std::uint64_t n = 1; n <= 256; ++n) {
    const auto a = zsq::closed_form_eigenvalues(n, zsq::MatrixKind::A);
    zsq::KahanAccumulator acc;
    for (const double e : a) acc.add(e);
    const double expected =
        static_cast<double>(zsq::trace_power(n, 1).value.convert_to<long double>());
    CHECK(std::fabs(acc.sum - expected) <= 1e-12 * expected);
  }
}

TEST_CASE("Sturm counts at the bracket ends") {
  for (const std::uint64_t n : {1ULL, 5ULL, 64ULL, 256ULL}) {
    CHECK(zsq::sturm_count_below(n, 0.0) == 0);
    CHECK(zsq::sturm_count_below(n, 4.0) == static_cast<int>(n));
  }
}
