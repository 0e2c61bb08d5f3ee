#pragma once

/// Command-line front end, exposed as a library so jobs can be driven and
/// tested in-process.  A JobSpec captures one invocation; run_job produces
/// the output document and exit code deterministically.
///
/// Exit codes: 0 success, 1 computation / verification failure, 2 bad spec.

#include <optional>
#include <string>
#include <vector>

#include "qint/json_io.hpp"
#include "qint/quadrature.hpp"

namespace qint::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class Command { kIntegrate, kCoin, kVerify, kFtc };
enum class Format { kText, kJson, kCsv };

struct JobSpec {
  Command command = Command::kIntegrate;
  Json measure = Json{{"kind", "lebesgue2"}};
  Json fn = Json{{"kind", "monomial"}, {"n", 1}};
  double from = 0.0;
  double to = 1.0;
  double center = 0.0;
  std::optional<double> tol;
  int digits = -1;          // -1 = shortest round-trip decimals
  int coin_n_max = 20;
  Format format = Format::kText;
  std::string out_path;     // empty = stdout

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

Json job_to_json(const JobSpec& spec);
JobSpec job_from_json(const Json& j);

/// "lebesgue2", "destructive:0.75", "lebesgue", "coin:3", "squared:w,...",
/// or a raw JSON object.
Json parse_measure_arg(const std::string& arg);

/// "monomial:2", "poly:c0,c1,...", "exp", "tent", "cos", "sin",
/// "cosh_sqrt2", or a raw JSON object (including {"kind":"simple",...}).
Json parse_fn_arg(const std::string& arg);

/// Parses argv (without the program name).  Throws std::invalid_argument
/// with a diagnostic naming the flag or field on bad input.  Honors the
/// QINT_TOL environment variable as the tolerance default.
JobSpec parse_args(const std::vector<std::string>& args);

struct RunResult {
  int exit_code = 0;
  std::string document;
};

RunResult run_job(const JobSpec& spec);

/// Full front end: parse, run, write the document to stdout or --out.
int main_entry(int argc, const char* const* argv);

QuadratureConfig config_for(const JobSpec& spec);

}  // namespace qint::cli
