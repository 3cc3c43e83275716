#pragma once

#include <string>
#include <vector>

#include "citer/check.hpp"
#include "citer/json_io.hpp"

namespace citer {

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> results;
  QuadratureConfig config;

  int count(CheckStatus s) const;
  bool all_passed() const { return count(CheckStatus::Fail) == 0; }
};

/// "all", "core", "comult", "zeta", "continuation", "monodromy".
const std::vector<std::string>& suite_names();

/// Runs every check of the named suite. Checks may run concurrently; the
/// result order is the suite's definition order. Throws InvalidArgument for
/// an unknown suite name.
///
/// A rel_tol looser than the default also widens every non-zero check
/// tolerance to 100 * rel_tol.
VerificationReport run_suite(const std::string& name, const QuadratureConfig& cfg = {});

/// Engine identifiers echoed into reports.
io::json version_info();

io::json to_json(const VerificationReport& report, bool timings);

}  // namespace citer
