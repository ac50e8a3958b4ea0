#include "zetasqueeze.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "bounds.hpp"
#include "determinant.hpp"
#include "errors.hpp"
#include "exact_matrices.hpp"
#include "power_sums.hpp"
#include "reporter.hpp"
#include "spectrum.hpp"

struct zs_run_config {
  zsq::RunConfig impl;
};

struct zs_report {
  zsq::VerificationReport impl;
};

namespace {

thread_local std::string g_last_error;

zs_status fail(zs_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
zs_status guarded(Fn&& fn) {
  try {
    fn();
    return ZS_OK;
  } catch (const zsq::InvalidArgument& e) {
    return fail(ZS_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const zsq::CapExceeded& e) {
    return fail(ZS_ERROR_CAP_EXCEEDED, e.what());
  } catch (const zsq::PoleError& e) {
    return fail(ZS_ERROR_POLE, e.what());
  } catch (const zsq::ConvergenceError& e) {
    return fail(ZS_ERROR_NO_CONVERGENCE, e.what());
  } catch (const std::exception& e) {
    return fail(ZS_ERROR_INTERNAL, e.what());
  }
}

char* alloc_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

zsq::MatrixKind parse_kind(char kind) {
  if (kind == 'A' || kind == 'a') return zsq::MatrixKind::A;
  if (kind == 'B' || kind == 'b') return zsq::MatrixKind::B;
  throw zsq::InvalidArgument("matrix kind must be 'A' or 'B'");
}

std::uint64_t effective_cap(std::uint64_t n_cap) {
  return n_cap != 0 ? n_cap : zsq::kDefaultTraceCap;
}

}  // namespace

extern "C" {

const char* zs_version_string(void) { return "0.1.0"; }

const char* zs_status_name(zs_status status) {
  switch (status) {
    case ZS_OK: return "ZS_OK";
    case ZS_ERROR_NULL_POINTER: return "ZS_ERROR_NULL_POINTER";
    case ZS_ERROR_INVALID_ARGUMENT: return "ZS_ERROR_INVALID_ARGUMENT";
    case ZS_ERROR_CAP_EXCEEDED: return "ZS_ERROR_CAP_EXCEEDED";
    case ZS_ERROR_POLE: return "ZS_ERROR_POLE";
    case ZS_ERROR_NO_CONVERGENCE: return "ZS_ERROR_NO_CONVERGENCE";
    case ZS_ERROR_INTERNAL: return "ZS_ERROR_INTERNAL";
  }
  return "ZS_UNKNOWN";
}

const char* zs_last_error_message(void) { return g_last_error.c_str(); }

void zs_string_free(char* s) { std::free(s); }

zs_status zs_matrix_entry(uint64_t n, char kind, uint64_t i, uint64_t j,
                          int64_t* out_entry) {
  if (out_entry == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded([&] {
    const zsq::StructuredMatrix m = zsq::build_matrix(n, parse_kind(kind));
    *out_entry = m.entry(i, j).convert_to<int64_t>();
  });
}

zs_status zs_verify_inverse(uint64_t n, int* out_ok) {
  if (out_ok == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded([&] { *out_ok = zsq::verify_inverse(n) ? 1 : 0; });
}

zs_status zs_trace_power(uint64_t n, uint32_t p, uint64_t n_cap,
                         char** out_value) {
  if (out_value == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded([&] {
    const zsq::TraceRecord record =
        zsq::trace_power(n, p, effective_cap(n_cap));
    *out_value = alloc_string(record.value.str());
  });
}

zs_status zs_det_recurrence(uint64_t n, double theta, double* out_value) {
  if (out_value == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded([&] { *out_value = zsq::det_recurrence(n, theta); });
}

zs_status zs_det_closed_form(uint64_t n, double theta, double* out_value) {
  if (out_value == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded([&] { *out_value = zsq::det_closed_form(n, theta); });
}

zs_status zs_verify_zero_set(uint64_t n, int* out_ok) {
  if (out_ok == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded([&] { *out_ok = zsq::verify_zero_set(n) ? 1 : 0; });
}

zs_status zs_theta_grid(uint64_t n, double* out_angles) {
  if (out_angles == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded([&] {
    const zsq::ThetaGrid grid = zsq::theta_grid(n);
    for (std::uint64_t k = 0; k < n; ++k) out_angles[k] = grid.angles[k];
  });
}

zs_status zs_eigenvalues_closed_form(uint64_t n, char kind,
                                     double* out_eigenvalues) {
  if (out_eigenvalues == nullptr)
    return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded([&] {
    const std::vector<double> eigs =
        zsq::closed_form_eigenvalues(n, parse_kind(kind));
    for (std::uint64_t k = 0; k < n; ++k) out_eigenvalues[k] = eigs[k];
  });
}

zs_status zs_eigenvalues_bisection(uint64_t n, double* out_eigenvalues) {
  if (out_eigenvalues == nullptr)
    return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded([&] {
    const std::vector<double> eigs = zsq::bisection_eigenvalues(n);
    for (std::uint64_t k = 0; k < n; ++k) out_eigenvalues[k] = eigs[k];
  });
}

zs_status zs_spectrum_max_abs_error(uint64_t n, double* out_error) {
  if (out_error == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded(
      [&] { *out_error = zsq::spectrum_report(n).max_abs_error; });
}

zs_status zs_power_sum(uint64_t n, uint32_t p, uint64_t n_cap,
                       char** out_numerator, char** out_denominator) {
  if (out_numerator == nullptr || out_denominator == nullptr)
    return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded([&] {
    const zsq::PowerSumReport report =
        zsq::power_sum(n, p, effective_cap(n_cap));
    *out_numerator = alloc_string(numerator(report.value).str());
    *out_denominator = alloc_string(denominator(report.value).str());
  });
}

zs_status zs_verify_cot_square_identity(uint64_t n_max, int* out_ok) {
  if (out_ok == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded(
      [&] { *out_ok = zsq::verify_cot_square_identity(n_max) ? 1 : 0; });
}

zs_status zs_verify_cot_fourth_identity(uint64_t n_max, int* out_ok) {
  if (out_ok == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded(
      [&] { *out_ok = zsq::verify_cot_fourth_identity(n_max) ? 1 : 0; });
}

zs_status zs_odd_partial_sum(uint64_t n, uint32_t p, double* out_value) {
  if (out_value == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded([&] { *out_value = zsq::odd_partial_sum(n, p).value; });
}

zs_status zs_odd_sum_enclosure(uint64_t n, uint32_t p, uint64_t n_cap,
                               double* out_lower, double* out_upper) {
  if (out_lower == nullptr || out_upper == nullptr)
    return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded([&] {
    const zsq::ZetaEnclosure enc =
        zsq::odd_sum_enclosure(n, p, effective_cap(n_cap));
    *out_lower = enc.lower;
    *out_upper = enc.upper;
  });
}

zs_status zs_zeta_enclosure(uint64_t n, uint32_t p, uint64_t n_cap,
                            double* out_lower, double* out_upper) {
  if (out_lower == nullptr || out_upper == nullptr)
    return fail(ZS_ERROR_NULL_POINTER, "null output");
  return guarded([&] {
    const zsq::ZetaEnclosure enc =
        zsq::zeta_enclosure(n, p, effective_cap(n_cap));
    *out_lower = enc.lower;
    *out_upper = enc.upper;
  });
}

zs_status zs_run_config_create(const char* command,
                               zs_run_config** out_config) {
  if (command == nullptr || out_config == nullptr)
    return fail(ZS_ERROR_NULL_POINTER, "null argument");
  const auto parsed = zsq::parse_command(command);
  if (!parsed)
    return fail(ZS_ERROR_INVALID_ARGUMENT,
                std::string("unknown command: ") + command);
  auto* config = new zs_run_config();
  config->impl.command = *parsed;
  *out_config = config;
  return ZS_OK;
}

void zs_run_config_destroy(zs_run_config* config) { delete config; }

zs_status zs_run_config_set_n(zs_run_config* config, uint64_t n) {
  if (config == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null config");
  config->impl.n = n;
  return ZS_OK;
}

zs_status zs_run_config_set_n_max(zs_run_config* config, uint64_t n_max) {
  if (config == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null config");
  config->impl.n_max = n_max;
  return ZS_OK;
}

zs_status zs_run_config_set_p(zs_run_config* config, uint32_t p) {
  if (config == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null config");
  if (p == 0) return fail(ZS_ERROR_INVALID_ARGUMENT, "p must be positive");
  config->impl.p = p;
  return ZS_OK;
}

zs_status zs_run_config_set_ladder(zs_run_config* config,
                                   const uint64_t* values, size_t count) {
  if (config == nullptr || (values == nullptr && count != 0))
    return fail(ZS_ERROR_NULL_POINTER, "null argument");
  config->impl.ladder.assign(values, values + count);
  return ZS_OK;
}

zs_status zs_run_config_set_format(zs_run_config* config, const char* format) {
  if (config == nullptr || format == nullptr)
    return fail(ZS_ERROR_NULL_POINTER, "null argument");
  const auto parsed = zsq::parse_format(format);
  if (!parsed)
    return fail(ZS_ERROR_INVALID_ARGUMENT,
                std::string("unknown format: ") + format);
  config->impl.format = *parsed;
  return ZS_OK;
}

zs_status zs_run_config_set_seed(zs_run_config* config, uint64_t seed) {
  if (config == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null config");
  config->impl.seed = seed;
  return ZS_OK;
}

zs_status zs_run_config_set_det_tolerance(zs_run_config* config,
                                          double tolerance) {
  if (config == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null config");
  if (!(tolerance > 0.0))
    return fail(ZS_ERROR_INVALID_ARGUMENT, "tolerance must be positive");
  config->impl.det_tolerance = tolerance;
  return ZS_OK;
}

zs_status zs_run_config_set_trace_cap(zs_run_config* config, uint64_t n_cap) {
  if (config == nullptr) return fail(ZS_ERROR_NULL_POINTER, "null config");
  if (n_cap == 0)
    return fail(ZS_ERROR_INVALID_ARGUMENT, "trace cap must be positive");
  config->impl.trace_cap = n_cap;
  return ZS_OK;
}

zs_status zs_run(const zs_run_config* config, zs_report** out_report) {
  if (config == nullptr || out_report == nullptr)
    return fail(ZS_ERROR_NULL_POINTER, "null argument");
  return guarded([&] {
    auto* report = new zs_report();
    try {
      report->impl = zsq::run(config->impl);
    } catch (...) {
      delete report;
      throw;
    }
    *out_report = report;
  });
}

void zs_report_destroy(zs_report* report) { delete report; }

int zs_report_all_passed(const zs_report* report) {
  return report != nullptr && report->impl.all_passed() ? 1 : 0;
}

size_t zs_report_check_count(const zs_report* report) {
  return report != nullptr ? report->impl.checks.size() : 0;
}

size_t zs_report_failed_count(const zs_report* report) {
  return report != nullptr ? report->impl.failed_count() : 0;
}

zs_status zs_report_render(const zs_report* report, const char* format,
                           char** out_text) {
  if (report == nullptr || out_text == nullptr)
    return fail(ZS_ERROR_NULL_POINTER, "null argument");
  zsq::OutputFormat fmt = report->impl.config.format;
  if (format != nullptr) {
    const auto parsed = zsq::parse_format(format);
    if (!parsed)
      return fail(ZS_ERROR_INVALID_ARGUMENT,
                  std::string("unknown format: ") + format);
    fmt = *parsed;
  }
  return guarded(
      [&] { *out_text = alloc_string(zsq::render(report->impl, fmt)); });
}

}  // extern "C"
