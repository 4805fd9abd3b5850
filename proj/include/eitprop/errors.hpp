#pragma once

#include <stdexcept>
#include <string>

namespace eitprop {

// Error categories surfaced as machine-readable tokens by the CLI.
enum class ErrorCategory {
  InvalidParameter,
  DimensionMismatch,
  Integration,
  SingularSteadyState,
  GridRefinement,
  UndefinedGain,
  Config,
  Io,
};

const char* category_name(ErrorCategory c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, const std::string& msg)
      : std::runtime_error(msg), category_(cat) {}
  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

struct InvalidParameterError : Error {
  explicit InvalidParameterError(const std::string& msg)
      : Error(ErrorCategory::InvalidParameter, msg) {}
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& msg)
      : Error(ErrorCategory::DimensionMismatch, msg) {}
};

// Carries the integration time reached before the failure.
struct IntegrationError : Error {
  IntegrationError(const std::string& msg, double t)
      : Error(ErrorCategory::Integration, msg), t_reached(t) {}
  double t_reached;
};

struct SingularSteadyStateError : Error {
  explicit SingularSteadyStateError(const std::string& msg)
      : Error(ErrorCategory::SingularSteadyState, msg) {}
};

// Raised when the zeta-march stability monitor trips; suggests a finer grid.
struct GridRefinementError : Error {
  GridRefinementError(const std::string& msg, int suggested)
      : Error(ErrorCategory::GridRefinement, msg), suggested_n_zeta(suggested) {}
  int suggested_n_zeta;
};

struct UndefinedGainError : Error {
  explicit UndefinedGainError(const std::string& msg)
      : Error(ErrorCategory::UndefinedGain, msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg)
      : Error(ErrorCategory::Config, msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(ErrorCategory::Io, msg) {}
};

}  // namespace eitprop
