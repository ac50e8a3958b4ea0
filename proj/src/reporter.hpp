#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "exact.hpp"
#include "exact_matrices.hpp"

namespace zsq {

enum class Command { Verify, Spectrum, Sums, Zeta, All };
enum class OutputFormat { Table, Csv, Json };

/// One run = one command with fully resolved defaults. Identical configs
/// produce byte-identical CSV/JSON output.
struct RunConfig {
  Command command = Command::All;
  std::uint64_t n = 0;                // 0 -> per-command default
  std::uint64_t n_max = 0;            // 0 -> per-command default
  unsigned p = 1;
  std::vector<std::uint64_t> ladder;  // empty -> default ladder for p
  OutputFormat format = OutputFormat::Table;
  std::string output_path;            // consumed by the CLI; empty = stdout
  std::uint64_t seed = 42;            // drives the sampled-theta suites
  double det_tolerance = 1e-9;        // determinant agreement tolerance
  std::uint64_t trace_cap = kDefaultTraceCap;
};

using FieldValue =
    std::variant<bool, std::uint64_t, double, std::string, ExactRational>;

struct CheckRecord {
  std::string suite;
  std::string name;
  std::uint64_t n = 0;
  unsigned p = 0;
  bool pass = false;
  bool exact = false;  // exact big-integer equality, no tolerance involved
  std::optional<double> measured_error;
  std::optional<double> tolerance;
  // Extra columns, rendered in insertion order.
  std::vector<std::pair<std::string, FieldValue>> fields;
};

struct SuiteTiming {
  std::string suite;
  double seconds = 0.0;
};

struct VerificationReport {
  RunConfig config;
  std::vector<CheckRecord> checks;
  std::vector<SuiteTiming> timings;  // rendered in table output only

  std::size_t passed_count() const;
  std::size_t failed_count() const;
  bool all_passed() const;
};

VerificationReport run(const RunConfig& config);

std::string render(const VerificationReport& report, OutputFormat format);
std::string render(const VerificationReport& report);

std::optional<Command> parse_command(const std::string& name);
std::optional<OutputFormat> parse_format(const std::string& name);
std::string command_name(Command command);
std::string format_name(OutputFormat format);

}  // namespace zsq
