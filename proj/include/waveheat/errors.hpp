#pragma once

#include <stdexcept>
#include <string>

namespace waveheat {

/// Linear-solve breakdowns, non-finite fields, eigensolver failures.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by fit_decay_rate when a series has too few usable samples.
struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Config-file problems; carries the offending line when known.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_number(line) {}
  int line_number;
};

}  // namespace waveheat
