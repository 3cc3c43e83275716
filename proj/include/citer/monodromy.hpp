#pragma once

#include "citer/engine.hpp"

namespace citer {

/// Li_s(w) continued once around z = 1 along
/// [0 -> eta] [eta -> 1-eps] (circle about 1)^loops [1-eps -> w].
struct MonodromyScenario {
  Complex s{2.0, 0.0};
  Complex w{0.5, 0.0};
  double eta = 0.75;
  double epsilon = 1e-3;
  int n_terms = 40;
  int loops = 1;  // counterclockwise turns about 1; 0 is the null loop
};

/// Throws InvalidArgument for out-of-range fields and
/// TechnicalConditionViolated when |log eta| >= |log w|.
void validate(const MonodromyScenario& sc);

Complex direct_polylog(const MonodromyScenario& sc, const QuadratureConfig& cfg = {});

struct LoopedPolylog {
  Complex value;
  Complex prefix;        // the [0 -> eta] piece, remainder taken to w
  Complex coproduct;     // comultiplied value over the rest of the path
  Complex loop_term_n1;  // n = 1 loop term of the comultiplication sum
  double error_budget = 0.0;
};

LoopedPolylog looped_polylog(const MonodromyScenario& sc, const QuadratureConfig& cfg = {});

struct MonodromyDefect {
  Complex defect;     // looped - direct
  Complex predicted;  // -(2 pi i / Gamma(s)) log^{s-1}(w) on the matched branch
  int matched_branch = 0;
  double error_budget = 0.0;
  Complex loop_term_n1;
};

/// Throws NoBranchMatch when no branch offset in {0, -1, 1} lands within
/// 10x the error budget.
MonodromyDefect monodromy_defect(const MonodromyScenario& sc, const QuadratureConfig& cfg = {});

/// The smallest eta with |log eta| < |log w| leaving a 25% margin in the
/// technical condition at the given epsilon.
double admissible_eta(Complex w, double epsilon);

}  // namespace citer
