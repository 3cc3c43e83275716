#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace citer {

/// Every failure raised by the library carries one of these codes. The CLI
/// maps the category (input vs numeric) onto its exit code.
enum class ErrorCode {
  // input / schema
  InvalidArgument,
  InvalidRational,
  TrivialCharacter,
  NotPrime,
  UnsupportedField,
  DiscontinuousConcat,
  DepthUnsupported,
  // numeric / precondition
  NoClosedForm,
  NoLaurentData,
  Pole,
  ZeroBase,
  NoConvergence,
  TailTooFat,
  RadiusError,
  CapExceeded,
  SlowConvergence,
  SingularAt1,
  DivergentIntegral,
  ConvergenceConstraint,
  PathThroughSingularity,
  DominationViolated,
  TailNotSmall,
  PositiveIntegerPole,
  TechnicalConditionViolated,
  NoBranchMatch,
};

std::string_view error_name(ErrorCode code) noexcept;

/// True for codes that signal malformed input rather than a numerical or
/// mathematical precondition failure.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace citer
