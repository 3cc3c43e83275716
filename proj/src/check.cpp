#include "citer/check.hpp"

#include <cmath>

namespace citer {

CheckResult make_check(std::string name, Complex computed, Complex expected, double tolerance,
                       std::string provenance) {
  CheckResult r;
  r.name = std::move(name);
  r.computed = computed;
  r.expected = expected;
  r.abs_error = std::abs(computed - expected);
  r.tolerance = tolerance;
  // a NaN error compares false and therefore fails
  r.status = r.abs_error <= tolerance ? CheckStatus::Pass : CheckStatus::Fail;
  r.provenance = std::move(provenance);
  return r;
}

CheckResult skipped_check(std::string name, Complex computed, Complex expected, std::string note,
                          std::string provenance) {
  CheckResult r;
  r.name = std::move(name);
  r.computed = computed;
  r.expected = expected;
  r.abs_error = std::abs(computed - expected);
  r.status = CheckStatus::Skipped;
  r.note = std::move(note);
  r.provenance = std::move(provenance);
  return r;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

}  // namespace citer
