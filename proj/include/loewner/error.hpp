#pragma once

#include <stdexcept>
#include <string>

namespace loewner {

enum class ErrorCode {
  NonConvergence,
  DomainViolation,
  DimensionMismatch,
  DegenerateInterval,
  NotStrictlyPositive,
  WeightOutOfRange,
  NonPositiveFunction,
  SpectraOutOfBounds,
  WeightsNotNormalized,
  HypothesisFailed,
  FlagMissing,
  ZeroValueViolation,
  NotUnitVector,
  InfeasibleConstruction,
  UnknownChecker,
  UnknownCondition,
  QuadratureNotConverged,
  NotSymmetric,
  NonFiniteEntry,
  InvalidInterval,
  InvalidArgument,
  ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

} // namespace loewner
