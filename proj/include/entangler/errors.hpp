#pragma once

#include <stdexcept>
#include <string>

namespace entangler {

// Numeric-domain failures (CLI exit code 3).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateDenominator : NumericError {
  using NumericError::NumericError;
};

struct NotTheSecularMatrix : NumericError {
  using NumericError::NumericError;
};

struct LeakageOutOfSubspace : NumericError {
  using NumericError::NumericError;
};

struct NotNormalized : NumericError {
  using NumericError::NumericError;
};

struct InvalidDensity : NumericError {
  using NumericError::NumericError;
};

struct StepFailure : NumericError {
  using NumericError::NumericError;
};

struct ConvergenceFailure : NumericError {
  using NumericError::NumericError;
};

// Configuration failures (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : ConfigError {
  ParseError(int line, int col, const std::string& what)
      : ConfigError("parse error at " + std::to_string(line) + ":" +
                    std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct ValidationError : ConfigError {
  using ConfigError::ConfigError;
};

}  // namespace entangler
