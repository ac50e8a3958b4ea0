// Exercises the shared library strictly through the public C header.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "zetasqueeze.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string take_string(char* s) {
  std::string out = s != nullptr ? s : "";
  zs_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(zs_version_string()) > 0);
  CHECK(std::string(zs_status_name(ZS_OK)) == "ZS_OK");
  CHECK(std::string(zs_status_name(ZS_ERROR_CAP_EXCEEDED)) ==
        "ZS_ERROR_CAP_EXCEEDED");
}

TEST_CASE("matrix entries and error codes") {
  int64_t entry = 0;
  CHECK(zs_matrix_entry(3, 'A', 1, 1, &entry) == ZS_OK);
  CHECK(entry == 3);
  CHECK(zs_matrix_entry(2, 'B', 1, 2, &entry) == ZS_OK);
  CHECK(entry == -1);
  CHECK(zs_matrix_entry(0, 'A', 1, 1, &entry) == ZS_ERROR_INVALID_ARGUMENT);
  CHECK(std::strlen(zs_last_error_message()) > 0);
  CHECK(zs_matrix_entry(3, 'x', 1, 1, &entry) == ZS_ERROR_INVALID_ARGUMENT);
  CHECK(zs_matrix_entry(3, 'A', 1, 1, nullptr) == ZS_ERROR_NULL_POINTER);
}

TEST_CASE("inverse, traces, power sums") {
  int ok = 0;
  CHECK(zs_verify_inverse(30, &ok) == ZS_OK);
  CHECK(ok == 1);

  char* value = nullptr;
  CHECK(zs_trace_power(2, 2, 0, &value) == ZS_OK);
  CHECK(take_string(value) == "7");

  CHECK(zs_trace_power(600, 3, 0, &value) == ZS_ERROR_CAP_EXCEEDED);
  CHECK(zs_trace_power(600, 3, 600, &value) == ZS_OK);
  CHECK(!take_string(value).empty());

  char* num = nullptr;
  char* den = nullptr;
  CHECK(zs_power_sum(2, 2, 0, &num, &den) == ZS_OK);
  CHECK(take_string(num) == "90");
  CHECK(take_string(den) == "1");

  CHECK(zs_verify_cot_square_identity(100, &ok) == ZS_OK);
  CHECK(ok == 1);
  CHECK(zs_verify_cot_fourth_identity(100, &ok) == ZS_OK);
  CHECK(ok == 1);
}

TEST_CASE("determinant surface") {
  double value = 0.0;
  CHECK(zs_det_recurrence(2, kPi / 4, &value) == ZS_OK);
  CHECK(value == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(zs_det_closed_form(2, kPi / 4, &value) == ZS_OK);
  CHECK(value == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(zs_det_recurrence(2, -1.0, &value) == ZS_ERROR_INVALID_ARGUMENT);
  CHECK(zs_det_closed_form(2, std::nextafter(kPi / 2, 0.0), &value) ==
        ZS_ERROR_POLE);

  int ok = 0;
  CHECK(zs_verify_zero_set(32, &ok) == ZS_OK);
  CHECK(ok == 1);
}

TEST_CASE("spectrum surface") {
  std::vector<double> angles(3);
  CHECK(zs_theta_grid(3, angles.data()) == ZS_OK);
  CHECK(angles[0] == doctest::Approx(kPi / 14).epsilon(1e-14));
  CHECK(angles[2] == doctest::Approx(5 * kPi / 14).epsilon(1e-14));

  std::vector<double> closed(16);
  std::vector<double> numeric(16);
  CHECK(zs_eigenvalues_closed_form(16, 'B', closed.data()) == ZS_OK);
  CHECK(zs_eigenvalues_bisection(16, numeric.data()) == ZS_OK);
  for (int i = 0; i < 16; ++i)
    CHECK(std::fabs(closed[i] - numeric[i]) <= 1e-10);

  double err = 1.0;
  CHECK(zs_spectrum_max_abs_error(8, &err) == ZS_OK);
  CHECK(err <= 1e-10);
}

TEST_CASE("enclosure surface") {
  double lower = 0.0;
  double upper = 0.0;
  CHECK(zs_odd_sum_enclosure(1, 1, 0, &lower, &upper) == ZS_OK);
  CHECK(lower == doctest::Approx(kPi * kPi / 12).epsilon(1e-12));
  CHECK(upper == doctest::Approx(kPi * kPi / 9).epsilon(1e-12));

  CHECK(zs_zeta_enclosure(1000, 1, 0, &lower, &upper) == ZS_OK);
  const double zeta2 = kPi * kPi / 6.0;
  CHECK(lower < zeta2);
  CHECK(zeta2 < upper);

  double partial = 0.0;
  CHECK(zs_odd_partial_sum(1, 1, &partial) == ZS_OK);
  CHECK(partial == 1.0);
  CHECK(zs_odd_partial_sum(0, 1, &partial) == ZS_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("report handles") {
  zs_run_config* config = nullptr;
  REQUIRE(zs_run_config_create("verify", &config) == ZS_OK);
  CHECK(zs_run_config_set_n_max(config, 25) == ZS_OK);
  CHECK(zs_run_config_set_format(config, "json") == ZS_OK);
  CHECK(zs_run_config_set_seed(config, 7) == ZS_OK);

  zs_report* report = nullptr;
  REQUIRE(zs_run(config, &report) == ZS_OK);
  CHECK(zs_report_all_passed(report) == 1);
  CHECK(zs_report_check_count(report) == 6);
  CHECK(zs_report_failed_count(report) == 0);

  char* text = nullptr;
  CHECK(zs_report_render(report, nullptr, &text) == ZS_OK);
  const std::string json = take_string(text);
  CHECK(json.front() == '{');
  CHECK(json.find("\"suite\": \"verify\"") != std::string::npos);

  CHECK(zs_report_render(report, "csv", &text) == ZS_OK);
  CHECK(take_string(text).rfind("suite,check,", 0) == 0);
  CHECK(zs_report_render(report, "xml", &text) == ZS_ERROR_INVALID_ARGUMENT);

  zs_report_destroy(report);
  zs_run_config_destroy(config);
}

TEST_CASE("a failing tolerance yields a failing report") {
  zs_run_config* config = nullptr;
  REQUIRE(zs_run_config_create("verify", &config) == ZS_OK);
  CHECK(zs_run_config_set_n_max(config, 10) == ZS_OK);
  CHECK(zs_run_config_set_det_tolerance(config, 1e-30) == ZS_OK);
  zs_report* report = nullptr;
  REQUIRE(zs_run(config, &report) == ZS_OK);
  CHECK(zs_report_all_passed(report) == 0);
  CHECK(zs_report_failed_count(report) == 1);
  zs_report_destroy(report);
  zs_run_config_destroy(config);
}

TEST_CASE("config validation") {
  zs_run_config* config = nullptr;
  CHECK(zs_run_config_create("bogus", &config) == ZS_ERROR_INVALID_ARGUMENT);
  CHECK(zs_run_config_create(nullptr, &config) == ZS_ERROR_NULL_POINTER);
  REQUIRE(zs_run_config_create("zeta", &config) == ZS_OK);
  CHECK(zs_run_config_set_p(config, 0) == ZS_ERROR_INVALID_ARGUMENT);
  CHECK(zs_run_config_set_format(config, "yaml") == ZS_ERROR_INVALID_ARGUMENT);
  CHECK(zs_run_config_set_trace_cap(config, 0) == ZS_ERROR_INVALID_ARGUMENT);
  const uint64_t ladder[3] = {10, 100, 1000};
  CHECK(zs_run_config_set_ladder(config, ladder, 3) == ZS_OK);
  zs_run_config_destroy(config);
}
