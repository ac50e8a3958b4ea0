#include "reporter.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include <json.hpp>

#include "bounds.hpp"
#include "determinant.hpp"
#include "errors.hpp"
#include "power_sums.hpp"
#include "spectrum.hpp"

namespace zsq {

namespace {

constexpr double kSpectrumTolerance = 1e-10;
constexpr double kFloatCrosscheckTolerance = 1e-9;
constexpr double kZeta2Reference = 1.6449340668482264;  // pi^2/6
constexpr double kZeta4Reference = 1.0823232337111382;  // pi^4/90

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_table(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// Deterministic uniform doubles in [0, 1); avoids the
// implementation-defined std::uniform_real_distribution.
class UniformSampler {
 public:
  explicit UniformSampler(std::uint64_t seed) : gen_(seed) {}
  double next() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double next_in(double lo, double hi) { return lo + next() * (hi - lo); }

 private:
  std::mt19937_64 gen_;
};

class SuiteClock {
 public:
  SuiteClock(VerificationReport& report, std::string suite)
      : report_(report), suite_(std::move(suite)),
        start_(std::chrono::steady_clock::now()) {}
  ~SuiteClock() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    report_.timings.push_back(
        {suite_, std::chrono::duration<double>(elapsed).count()});
  }

 private:
  VerificationReport& report_;
  std::string suite_;
  std::chrono::steady_clock::time_point start_;
};

std::string field_to_csv(const FieldValue& value) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::uint64_t u) const { return std::to_string(u); }
    std::string operator()(double d) const { return fmt17(d); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const ExactRational& r) const {
      std::string s = numerator(r).str();
      if (denominator(r) != 1) s += "/" + denominator(r).str();
      return s;
    }
  };
  return std::visit(Visitor{}, value);
}

void field_to_json(nlohmann::ordered_json& object, const std::string& key,
                   const FieldValue& value) {
  struct Visitor {
    nlohmann::ordered_json& object;
    const std::string& key;
    void operator()(bool b) const { object[key] = b; }
    void operator()(std::uint64_t u) const { object[key] = u; }
    void operator()(double d) const { object[key] = d; }
    void operator()(const std::string& s) const { object[key] = s; }
    void operator()(const ExactRational& r) const {
      object[key] = {{"numerator", numerator(r).str()},
                     {"denominator", denominator(r).str()}};
    }
  };
  std::visit(Visitor{object, key}, value);
}

const FieldValue* find_field(const CheckRecord& check, const std::string& key) {
  for (const auto& [name, value] : check.fields)
    if (name == key) return &value;
  return nullptr;
}

// ----- verify suites -----------------------------------------------------

void run_verify(const RunConfig& cfg, VerificationReport& report) {
  const std::uint64_t n_max = cfg.n_max != 0 ? cfg.n_max : 100;
  SuiteClock clock(report, "verify");

  {
    CheckRecord check;
    check.suite = "exact_matrices";
    check.name = "inverse_identity";
    check.n = n_max;
    check.exact = true;
    check.pass = true;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (!verify_inverse(n)) {
        check.pass = false;
        check.fields.emplace_back("first_failure", n);
        break;
      }
    }
    check.fields.emplace_back("n_swept", n_max);
    report.checks.push_back(std::move(check));
  }

  {
    CheckRecord check;
    check.suite = "power_sums";
    check.name = "cot_square_closed_form";
    check.n = n_max;
    check.p = 1;
    check.exact = true;
    check.pass = true;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (power_sum(n, 1).value != ExactRational(ExactInt(2) * n * n + n)) {
        check.pass = false;
        check.fields.emplace_back("first_failure", n);
        break;
      }
    }
    check.fields.emplace_back("n_swept", n_max);
    report.checks.push_back(std::move(check));
  }

  {
    CheckRecord check;
    check.suite = "power_sums";
    check.name = "cot_fourth_closed_form";
    check.n = n_max;
    check.p = 2;
    check.exact = true;
    check.pass = true;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const ExactInt nn(n);
      const ExactInt rhs =
          8 * nn * nn * nn * nn + 16 * nn * nn * nn + 4 * nn * nn - nn;
      if (ExactRational(3) * power_sum(n, 2).value != ExactRational(rhs)) {
        check.pass = false;
        check.fields.emplace_back("first_failure", n);
        break;
      }
    }
    check.fields.emplace_back("n_swept", n_max);
    report.checks.push_back(std::move(check));
  }

  {
    CheckRecord check;
    check.suite = "determinant";
    check.name = "zero_set";
    check.n = n_max;
    check.tolerance = 1e-9;
    check.pass = true;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (!verify_zero_set(n)) {
        check.pass = false;
        check.fields.emplace_back("first_failure", n);
        break;
      }
    }
    check.fields.emplace_back("n_swept", n_max);
    report.checks.push_back(std::move(check));
  }

  UniformSampler sampler(cfg.seed);

  {
    CheckRecord check;
    check.suite = "determinant";
    check.name = "recurrence_vs_closed_form";
    const std::uint64_t n_top = std::min<std::uint64_t>(n_max, 50);
    check.n = n_top;
    check.tolerance = cfg.det_tolerance;
    constexpr int kSamples = 200;
    std::vector<double> thetas;
    thetas.reserve(kSamples);
    for (int s = 0; s < kSamples; ++s)
      thetas.push_back(sampler.next_in(0.01, std::numbers::pi / 2.0 - 0.05));
    double max_rel = 0.0;
    for (std::uint64_t n = 1; n <= n_top; ++n) {
      for (const double theta : thetas) {
        if (std::fabs(std::cos(theta)) < 1e-3) continue;
        const double by_rec = det_recurrence(n, theta);
        const double by_closed = det_closed_form(n, theta);
        const double rel = std::fabs(by_rec - by_closed) /
                           std::max(1.0, std::fabs(by_closed));
        max_rel = std::max(max_rel, rel);
      }
    }
    check.measured_error = max_rel;
    check.pass = max_rel <= cfg.det_tolerance;
    check.fields.emplace_back("theta_samples",
                              static_cast<std::uint64_t>(kSamples));
    report.checks.push_back(std::move(check));
  }

  {
    CheckRecord check;
    check.suite = "bounds";
    check.name = "angle_inequality_premise";  // sin(theta) < theta < tan(theta)
    check.pass = true;
    constexpr int kSamples = 100;
    for (int s = 0; s < kSamples; ++s) {
      double u = sampler.next();
      while (u == 0.0) u = sampler.next();
      const double theta = u * (std::numbers::pi / 2.0 - 0.01);
      if (!(std::sin(theta) < theta && theta < std::tan(theta))) {
        check.pass = false;
        break;
      }
    }
    check.fields.emplace_back("theta_samples",
                              static_cast<std::uint64_t>(kSamples));
    report.checks.push_back(std::move(check));
  }
}

// ----- spectrum ----------------------------------------------------------

void run_spectrum(const RunConfig& cfg, VerificationReport& report) {
  const std::uint64_t n_top = cfg.n != 0 ? cfg.n : 64;
  SuiteClock clock(report, "spectrum");
  for (std::uint64_t n = 1; n <= n_top; n *= 2) {
    const SpectrumReport sr = spectrum_report(n);
    CheckRecord check;
    check.suite = "spectrum";
    check.name = "closed_form_vs_bisection";
    check.n = n;
    check.measured_error = sr.max_abs_error;
    check.tolerance = kSpectrumTolerance;
    check.pass = sr.max_abs_error <= kSpectrumTolerance;
    report.checks.push_back(std::move(check));
  }
}

// ----- sums --------------------------------------------------------------

double float_cot_power_sum(std::uint64_t n, unsigned p) {
  const ThetaGrid grid = theta_grid(n);
  double sum = 0.0;
  for (const double theta : grid.angles) {
    const double cot = std::cos(theta) / std::sin(theta);
    double term = 1.0;
    for (unsigned i = 0; i < 2 * p; ++i) term *= cot;
    sum += term;
  }
  return sum;
}

void run_sums(const RunConfig& cfg, VerificationReport& report, unsigned p) {
  const std::uint64_t n_max = cfg.n_max != 0 ? cfg.n_max : 10;
  SuiteClock clock(report, "sums(p=" + std::to_string(p) + ")");
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const PowerSumReport ps = power_sum(n, p, cfg.trace_cap);

    bool identity_ok = true;
    if (p == 1) {
      identity_ok = ps.value == ExactRational(ExactInt(2) * n * n + n);
    } else if (p == 2) {
      const ExactInt nn(n);
      const ExactInt rhs =
          8 * nn * nn * nn * nn + 16 * nn * nn * nn + 4 * nn * nn - nn;
      identity_ok = ExactRational(3) * ps.value == ExactRational(rhs);
    }

    const double float_sum = float_cot_power_sum(n, p);
    const double exact_as_double =
        static_cast<double>(ps.value.convert_to<long double>());
    const double rel =
        std::fabs(float_sum - exact_as_double) / std::fabs(exact_as_double);

    CheckRecord check;
    check.suite = "power_sums";
    check.name = "power_sum";
    check.n = n;
    check.p = p;
    check.exact = p <= 2;
    check.measured_error = rel;
    check.tolerance = kFloatCrosscheckTolerance;
    check.pass = identity_ok && rel <= kFloatCrosscheckTolerance;
    check.fields.emplace_back("value", ps.value);
    check.fields.emplace_back(
        "provenance", std::string(ps.extension ? "trace-method extension"
                                               : "closed-form identity"));
    report.checks.push_back(std::move(check));
  }
}

// ----- zeta --------------------------------------------------------------

void run_zeta(const RunConfig& cfg, VerificationReport& report, unsigned p,
              bool use_config_ladder) {
  const std::vector<std::uint64_t> ladder =
      (use_config_ladder && !cfg.ladder.empty())
          ? cfg.ladder
          : default_ladder(p, cfg.trace_cap);
  SuiteClock clock(report, "zeta(p=" + std::to_string(p) + ")");

  const std::vector<SqueezeRow> rows = squeeze_table(p, ladder, cfg.trace_cap);
  for (const SqueezeRow& row : rows) {
    CheckRecord check;
    check.suite = "zeta";
    check.name = "odd_squeeze";
    check.n = row.n;
    check.p = p;
    check.pass = row.contains_partial;
    check.fields.emplace_back("partial_sum", row.partial.value);
    check.fields.emplace_back("lower", row.enclosure.lower);
    check.fields.emplace_back("upper", row.enclosure.upper);
    check.fields.emplace_back("width", row.enclosure.width);
    check.fields.emplace_back("contains_partial", row.contains_partial);
    report.checks.push_back(std::move(check));
  }

  {
    CheckRecord check;
    check.suite = "zeta";
    check.name = "width_monotone";
    check.n = ladder.back();
    check.p = p;
    check.pass = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (!(rows[i].enclosure.width < rows[i - 1].enclosure.width))
        check.pass = false;
    report.checks.push_back(std::move(check));
  }

  {
    const ZetaEnclosure enc = zeta_enclosure(ladder.back(), p, cfg.trace_cap);
    CheckRecord check;
    check.suite = "zeta";
    check.name = "zeta_enclosure";
    check.n = enc.n;
    check.p = p;
    check.fields.emplace_back("lower", enc.lower);
    check.fields.emplace_back("upper", enc.upper);
    check.fields.emplace_back("width", enc.width);
    check.fields.emplace_back(
        "provenance", std::string(enc.extension ? "trace-method extension"
                                                : "closed-form identity"));
    if (p == 1 || p == 2) {
      const double reference = p == 1 ? kZeta2Reference : kZeta4Reference;
      const bool contains = enc.lower <= reference && reference <= enc.upper;
      check.fields.emplace_back("reference", reference);
      check.fields.emplace_back("contains_reference", contains);
      check.pass = contains && enc.lower < enc.upper;
    } else {
      check.pass = enc.lower < enc.upper;
    }
    report.checks.push_back(std::move(check));
  }
}

}  // namespace

std::size_t VerificationReport::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [](const CheckRecord& c) { return c.pass; }));
}

std::size_t VerificationReport::failed_count() const {
  return checks.size() - passed_count();
}

bool VerificationReport::all_passed() const { return failed_count() == 0; }

VerificationReport run(const RunConfig& config) {
  VerificationReport report;
  report.config = config;
  switch (config.command) {
    case Command::Verify:
      run_verify(config, report);
      break;
    case Command::Spectrum:
      run_spectrum(config, report);
      break;
    case Command::Sums:
      run_sums(config, report, config.p);
      break;
    case Command::Zeta:
      run_zeta(config, report, config.p, true);
      break;
    case Command::All: {
      // Everything at per-command defaults.
      RunConfig defaults = config;
      defaults.n = 0;
      defaults.n_max = 0;
      run_verify(defaults, report);
      run_spectrum(defaults, report);
      run_sums(defaults, report, 1);
      run_sums(defaults, report, 2);
      run_zeta(defaults, report, 1, false);
      run_zeta(defaults, report, 2, false);
      break;
    }
  }
  return report;
}

namespace {

std::string render_csv(const VerificationReport& report) {
  std::string out;
  if (report.config.command == Command::Zeta) {
    // Stable squeeze-table schema: one row per ladder point.
    out += "n,partial_sum,lower,upper,width,contains_partial\n";
    for (const CheckRecord& check : report.checks) {
      if (check.name != "odd_squeeze") continue;
      out += std::to_string(check.n);
      for (const char* key :
           {"partial_sum", "lower", "upper", "width", "contains_partial"}) {
        const FieldValue* value = find_field(check, key);
        out += ",";
        out += value != nullptr ? field_to_csv(*value) : "";
      }
      out += "\n";
    }
    return out;
  }

  out += "suite,check,n,p,exact,measured_error,tolerance,status\n";
  for (const CheckRecord& check : report.checks) {
    out += check.suite + "," + check.name + "," + std::to_string(check.n) +
           "," + std::to_string(check.p) + "," +
           (check.exact ? "true" : "false") + ",";
    if (check.measured_error) out += fmt17(*check.measured_error);
    out += ",";
    if (check.tolerance) out += fmt17(*check.tolerance);
    out += ",";
    out += check.pass ? "pass" : "fail";
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json config_to_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["command"] = command_name(cfg.command);
  j["n"] = cfg.n;
  j["n_max"] = cfg.n_max;
  j["p"] = cfg.p;
  j["ladder"] = cfg.ladder;
  j["format"] = format_name(cfg.format);
  j["seed"] = cfg.seed;
  j["det_tolerance"] = cfg.det_tolerance;
  j["trace_cap"] = cfg.trace_cap;
  return j;
}

std::string render_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = command_name(report.config.command);
  j["config"] = config_to_json(report.config);
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& check : report.checks) {
    nlohmann::ordered_json c;
    c["suite"] = check.suite;
    c["name"] = check.name;
    c["n"] = check.n;
    c["p"] = check.p;
    c["status"] = check.pass ? "pass" : "fail";
    c["exact"] = check.exact;
    if (check.measured_error) c["measured_error"] = *check.measured_error;
    if (check.tolerance) c["tolerance"] = *check.tolerance;
    for (const auto& [key, value] : check.fields) field_to_json(c, key, value);
    j["checks"].push_back(std::move(c));
  }
  j["summary"] = {{"checks", report.checks.size()},
                  {"passed", report.passed_count()},
                  {"failed", report.failed_count()}};
  return j.dump(2) + "\n";
}

std::string render_table(const VerificationReport& report) {
  std::string out =
      "command: " + command_name(report.config.command) + "\n\n";
  char line[256];
  std::snprintf(line, sizeof(line), "%-14s %-28s %8s %3s %-6s %-12s %s\n",
                "suite", "check", "n", "p", "status", "error", "detail");
  out += line;
  out += std::string(100, '-') + "\n";
  for (const CheckRecord& check : report.checks) {
    std::string error_col = check.exact ? "exact" : "";
    if (check.measured_error) error_col = fmt_table(*check.measured_error);
    std::string detail;
    for (const auto& [key, value] : check.fields) {
      if (!detail.empty()) detail += " ";
      detail += key + "=" + field_to_csv(value);
    }
    std::snprintf(line, sizeof(line), "%-14s %-28s %8llu %3u %-6s %-12s ",
                  check.suite.c_str(), check.name.c_str(),
                  static_cast<unsigned long long>(check.n), check.p,
                  check.pass ? "pass" : "FAIL", error_col.c_str());
    out += line;
    out += detail + "\n";
  }
  std::snprintf(line, sizeof(line),
                "\nsummary: %zu checks, %zu passed, %zu failed\n",
                report.checks.size(), report.passed_count(),
                report.failed_count());
  out += line;
  for (const SuiteTiming& t : report.timings) {
    std::snprintf(line, sizeof(line), "  %-12s %.3f s\n", t.suite.c_str(),
                  t.seconds);
    out += line;
  }
  return out;
}

}  // namespace

std::string render(const VerificationReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv:
      return render_csv(report);
    case OutputFormat::Json:
      return render_json(report);
    case OutputFormat::Table:
      break;
  }
  return render_table(report);
}

std::string render(const VerificationReport& report) {
  return render(report, report.config.format);
}

std::optional<Command> parse_command(const std::string& name) {
  if (name == "verify") return Command::Verify;
  if (name == "spectrum") return Command::Spectrum;
  if (name == "sums") return Command::Sums;
  if (name == "zeta") return Command::Zeta;
  if (name == "all") return Command::All;
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string command_name(Command command) {
  switch (command) {
    case Command::Verify: return "verify";
    case Command::Spectrum: return "spectrum";
    case Command::Sums: return "sums";
    case Command::Zeta: return "zeta";
    case Command::All: return "all";
  }
  return "all";
}

std::string format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: return "table";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
  }
  return "table";
}

}  // namespace zsq
