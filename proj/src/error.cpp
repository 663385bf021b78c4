#include "loewner/error.hpp"

namespace loewner {

const char* error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::NonConvergence: return "NonConvergence";
  case ErrorCode::DomainViolation: return "DomainViolation";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::DegenerateInterval: return "DegenerateInterval";
  case ErrorCode::NotStrictlyPositive: return "NotStrictlyPositive";
  case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
  case ErrorCode::NonPositiveFunction: return "NonPositiveFunction";
  case ErrorCode::SpectraOutOfBounds: return "SpectraOutOfBounds";
  case ErrorCode::WeightsNotNormalized: return "WeightsNotNormalized";
  case ErrorCode::HypothesisFailed: return "HypothesisFailed";
  case ErrorCode::FlagMissing: return "FlagMissing";
  case ErrorCode::ZeroValueViolation: return "ZeroValueViolation";
  case ErrorCode::NotUnitVector: return "NotUnitVector";
  case ErrorCode::InfeasibleConstruction: return "InfeasibleConstruction";
  case ErrorCode::UnknownChecker: return "UnknownChecker";
  case ErrorCode::UnknownCondition: return "UnknownCondition";
  case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
  case ErrorCode::NotSymmetric: return "NotSymmetric";
  case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
  case ErrorCode::InvalidInterval: return "InvalidInterval";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

} // namespace loewner
