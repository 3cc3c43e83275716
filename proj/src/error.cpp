#include "citer/error.hpp"

namespace citer {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidRational: return "InvalidRational";
    case ErrorCode::TrivialCharacter: return "TrivialCharacterError";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::DiscontinuousConcat: return "DiscontinuousConcat";
    case ErrorCode::DepthUnsupported: return "DepthUnsupported";
    case ErrorCode::NoClosedForm: return "NoClosedForm";
    case ErrorCode::NoLaurentData: return "NoLaurentData";
    case ErrorCode::Pole: return "PoleError";
    case ErrorCode::ZeroBase: return "ZeroBaseError";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::TailTooFat: return "TailTooFat";
    case ErrorCode::RadiusError: return "RadiusError";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::SlowConvergence: return "SlowConvergence";
    case ErrorCode::SingularAt1: return "SingularAt1";
    case ErrorCode::DivergentIntegral: return "DivergentIntegral";
    case ErrorCode::ConvergenceConstraint: return "ConvergenceConstraint";
    case ErrorCode::PathThroughSingularity: return "PathThroughSingularity";
    case ErrorCode::DominationViolated: return "DominationViolated";
    case ErrorCode::TailNotSmall: return "TailNotSmall";
    case ErrorCode::PositiveIntegerPole: return "PositiveIntegerPole";
    case ErrorCode::TechnicalConditionViolated: return "TechnicalConditionViolated";
    case ErrorCode::NoBranchMatch: return "NoBranchMatch";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidRational:
    case ErrorCode::TrivialCharacter:
    case ErrorCode::NotPrime:
    case ErrorCode::UnsupportedField:
    case ErrorCode::DiscontinuousConcat:
    case ErrorCode::DepthUnsupported:
      return true;
    default:
      return false;
  }
}

}  // namespace citer
