#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace torimax {

/// Domain error with a module-qualified code, e.g. "lattice_core.MixedDimension".
/// The CLI maps these to exit status 1 and prints the code verbatim.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

/// Input/parse failures (bad files, malformed flags). Exit status 2 in the CLI.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace torimax
