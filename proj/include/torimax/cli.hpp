#pragma once

#include "torimax/numeric.hpp"

#include <iosfwd>
#include <string>

namespace torimax {

/// One parsed invocation. Exactly one command; parameters are validated per
/// command before dispatch.
struct RunConfig {
  enum class Command { Invariants, Certify, LemmaSearch, Family, FiberScan, Univariate };
  enum class Format { Text, Json };

  Command command = Command::Invariants;
  Format format = Format::Text;
  std::string input_path; // invariants, certify
  bool dim_check = false; // certify: cross-check the dimension-3 path
  int n = 3;              // lemma-search
  int bound = 1;          // lemma-search
  long long p = 0;        // family
  long long q = 1;        // family
  double a = 0.1;         // fiber-scan
  int grid = 100;         // fiber-scan
  double extent = 10.0;   // fiber-scan
  std::string coeffs;     // univariate, comma-separated rationals
};

/// Parses argv. Returns 0 and fills config on success; otherwise returns the
/// exit status to use (0 for --help, 2 for parse errors) with config unused.
int parse_cli(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
              std::ostream& err);

/// Executes a command: report on `out`, diagnostics on `err`.
/// Exit status 0 on success, 1 on domain errors (module-qualified error name
/// printed), 2 on input/parse errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// "3", "-4/7", "0.25" -> exact rational. Throws ParseError.
Rat parse_rational(const std::string& token);

} // namespace torimax
