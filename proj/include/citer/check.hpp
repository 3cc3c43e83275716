#pragma once

#include <string>

#include "citer/numerics.hpp"

namespace citer {

enum class CheckStatus { Pass, Fail, Skipped };

/// One numerical identity check: status is Pass iff abs_error <= tolerance.
struct CheckResult {
  std::string name;
  Complex computed;
  Complex expected;
  double abs_error = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::Fail;
  double runtime_ms = 0.0;
  std::string provenance;
  std::string note;

  bool passed() const { return status == CheckStatus::Pass; }
};

CheckResult make_check(std::string name, Complex computed, Complex expected, double tolerance,
                       std::string provenance = {});

CheckResult skipped_check(std::string name, Complex computed, Complex expected, std::string note,
                          std::string provenance = {});

const char* status_name(CheckStatus s);

}  // namespace citer
