#pragma once

#include <stdexcept>
#include <string>

namespace floquet_ising {

/// Bad user input: parameters, config files, flags.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integrator drift, degenerate modes, malformed correlation matrices.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateModeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NormDriftError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class UnitarityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Warnings go to std::clog unless a sink is installed.
using WarningSink = void (*)(const std::string&);
void set_warning_sink(WarningSink sink);
void warn(const std::string& message);

}  // namespace floquet_ising
