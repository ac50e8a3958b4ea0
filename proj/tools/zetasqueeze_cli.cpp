// Command-line front end; talks to the library through the C API only.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetasqueeze.h"

namespace {

constexpr int kExitAllPassed = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsageError = 2;

struct CliOptions {
  std::uint64_t n = 0;
  std::uint64_t n_max = 0;
  std::uint32_t p = 1;
  std::vector<std::uint64_t> ladder;
  std::string format = "table";
  std::string out_path;
  std::uint64_t seed = 42;
  double det_tol = 1e-9;
  std::uint64_t trace_cap = 0;  // 0 = library default
};

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsageError;
}

int run_command(const std::string& command, const CliOptions& opt) {
  zs_run_config* config = nullptr;
  zs_status status = zs_run_config_create(command.c_str(), &config);
  if (status != ZS_OK) return usage_error(zs_last_error_message());

  status = ZS_OK;
  if (opt.n != 0) status = zs_run_config_set_n(config, opt.n);
  if (status == ZS_OK && opt.n_max != 0)
    status = zs_run_config_set_n_max(config, opt.n_max);
  if (status == ZS_OK) status = zs_run_config_set_p(config, opt.p);
  if (status == ZS_OK && !opt.ladder.empty())
    status = zs_run_config_set_ladder(config, opt.ladder.data(),
                                      opt.ladder.size());
  if (status == ZS_OK)
    status = zs_run_config_set_format(config, opt.format.c_str());
  if (status == ZS_OK) status = zs_run_config_set_seed(config, opt.seed);
  if (status == ZS_OK)
    status = zs_run_config_set_det_tolerance(config, opt.det_tol);
  if (status == ZS_OK && opt.trace_cap != 0)
    status = zs_run_config_set_trace_cap(config, opt.trace_cap);
  if (status != ZS_OK) {
    const std::string message = zs_last_error_message();
    zs_run_config_destroy(config);
    return usage_error(message);
  }

  zs_report* report = nullptr;
  status = zs_run(config, &report);
  zs_run_config_destroy(config);
  if (status != ZS_OK) return usage_error(zs_last_error_message());

  char* text = nullptr;
  status = zs_report_render(report, nullptr, &text);
  if (status != ZS_OK) {
    const std::string message = zs_last_error_message();
    zs_report_destroy(report);
    return usage_error(message);
  }

  int exit_code =
      zs_report_all_passed(report) ? kExitAllPassed : kExitCheckFailed;
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file || !(file << text)) {
      zs_string_free(text);
      zs_report_destroy(report);
      return usage_error("cannot write output file: " + opt.out_path);
    }
  }
  zs_string_free(text);
  zs_report_destroy(report);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("zetasqueeze ") + zs_version_string() +
               " — exact matrix identities, tridiagonal spectra, cotangent "
               "power sums, and certified enclosures of even zeta values"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string command;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", opt.out_path, "Write output to a file");
    sub->add_option("--seed", opt.seed, "Seed for the sampled-theta checks")
        ->capture_default_str();
    sub->add_option("--trace-cap", opt.trace_cap,
                    "Order cap for exact matrix powers >= 3 (default 512)");
    sub->callback([&, sub] { command = sub->get_name(); });
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "Exact inverse, power-sum identities, determinant zero set");
  verify->add_option("--n-max", opt.n_max, "Largest order to sweep (default 100)");
  verify->add_option("--det-tol", opt.det_tol,
                     "Determinant agreement tolerance")
      ->capture_default_str();
  add_common(verify);

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Closed-form vs bisection eigenvalues on a doubling ladder");
  spectrum->add_option("--n", opt.n, "Largest order (default 64)");
  add_common(spectrum);

  CLI::App* sums =
      app.add_subcommand("sums", "Exact cotangent power sums S_p(n)");
  sums->add_option("--n-max", opt.n_max, "Largest grid size (default 10)");
  sums->add_option("--p", opt.p, "Half-exponent p of cot^{2p}")
      ->capture_default_str();
  add_common(sums);

  CLI::App* zeta = app.add_subcommand(
      "zeta", "Squeeze table and zeta(2p) enclosure along a ladder");
  zeta->add_option("--p", opt.p, "Half-exponent p (zeta(2p))")
      ->capture_default_str();
  zeta->add_option("--ladder", opt.ladder,
                   "Ascending grid sizes, comma separated")
      ->delimiter(',');
  add_common(zeta);

  CLI::App* all = app.add_subcommand("all", "Every suite at default sizes");
  add_common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  }

  // Explicit zero sizes are usage errors, not library defaults.
  for (const CLI::App* sub : {verify, sums}) {
    if (sub->count("--n-max") > 0 && opt.n_max == 0)
      return usage_error("--n-max must be positive");
  }
  if (spectrum->count("--n") > 0 && opt.n == 0)
    return usage_error("--n must be positive");

  return run_command(command, opt);
}
