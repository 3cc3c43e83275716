#include "citer/monodromy.hpp"

#include <cmath>
#include <sstream>

#include "citer/error.hpp"

namespace citer {

namespace {

const FormSpec kAlpha = FormSpec::one_minus();

Path loop_path(const MonodromyScenario& sc) {
  Path g = Path::line(sc.eta, 1.0 - sc.epsilon);
  for (int i = 0; i < sc.loops; ++i)
    g.segments.push_back(PathSegment::arc(1.0, sc.epsilon, kPi, 3.0 * kPi));
  return g;
}

}  // namespace

void validate(const MonodromyScenario& sc) {
  if (!(sc.s.real() > 1.0)) fail(ErrorCode::ConvergenceConstraint, "monodromy needs Re(s) > 1");
  if (!(std::abs(sc.w) < 1.0) || sc.w == 0.0) fail(ErrorCode::InvalidArgument, "w must satisfy 0 < |w| < 1");
  if (!(sc.eta > 0.0 && sc.eta < 1.0)) fail(ErrorCode::InvalidArgument, "eta must lie in (0, 1)");
  if (!(sc.epsilon > 0.0 && sc.epsilon < 0.5 * std::min(std::abs(1.0 - sc.w), 1.0 - sc.eta)))
    fail(ErrorCode::InvalidArgument, "epsilon must be below min(|1 - w|, 1 - eta) / 2");
  if (sc.n_terms < 0 || sc.loops < 0) fail(ErrorCode::InvalidArgument, "n_terms and loops must be >= 0");
  if (!(std::abs(std::log(sc.eta)) < std::abs(std::log(sc.w)))) {
    std::ostringstream os;
    os << "eta = " << sc.eta << " needs |log eta| < |log w| = " << std::abs(std::log(sc.w));
    fail(ErrorCode::TechnicalConditionViolated, os.str());
  }
}

double admissible_eta(Complex w, double epsilon) {
  const double d = std::abs(std::log(w / (1.0 - epsilon)));
  return (1.0 - epsilon) * std::exp(-0.75 * d);
}

Complex direct_polylog(const MonodromyScenario& sc, const QuadratureConfig& cfg) {
  return polylog_integral(sc.s, sc.w, Path::line(0.0, sc.w), cfg);
}

LoopedPolylog looped_polylog(const MonodromyScenario& sc, const QuadratureConfig& cfg) {
  validate(sc);
  const Complex t = sc.s - 1.0;
  LoopedPolylog out;
  // [0 -> eta] with the remainder of dz/z carried to w
  const Path head = Path::polyline({0.0, sc.eta, sc.w});
  const QuadResult prefix = chen_power_integral_parts(head, kAlpha, t, cfg).front();
  out.prefix = prefix.value;

  const Path gamma = loop_path(sc);
  const Path delta = Path::line(1.0 - sc.epsilon, sc.w);
  CoproductResult c;
  try {
    c = comultiplication_rhs(gamma, delta, kAlpha, t, sc.n_terms, cfg);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DominationViolated) throw;
    fail(ErrorCode::TechnicalConditionViolated, std::string("technical condition fails: ") + e.what());
  }
  out.coproduct = c.rhs;
  out.value = out.prefix + out.coproduct;

  if (sc.loops > 0) {
    const Complex d = integrate_form(delta, FormSpec::log(), cfg);
    const auto parts = chen_power_integral_parts(gamma, kAlpha, 1.0, cfg);
    Complex on_loop = 0;
    for (std::size_t i = 1; i < parts.size(); ++i) on_loop += parts[i].value;
    out.loop_term_n1 = on_loop * principal_power(d, t - 1.0) * rgamma(t);
  }
  out.error_budget = std::max(1e-8, c.tail_estimate + prefix.error);
  return out;
}

MonodromyDefect monodromy_defect(const MonodromyScenario& sc, const QuadratureConfig& cfg) {
  const LoopedPolylog looped = looped_polylog(sc, cfg);
  MonodromyDefect out;
  out.defect = looped.value - direct_polylog(sc, cfg);
  out.error_budget = looped.error_budget;
  out.loop_term_n1 = looped.loop_term_n1;
  const Complex log_w = std::log(sc.w);
  const Complex scale = -2.0 * kPi * kI * rgamma(sc.s) * static_cast<double>(sc.loops);
  double best = std::numeric_limits<double>::infinity();
  for (int b : {0, -1, 1}) {
    const Complex candidate = scale * principal_power(log_w, sc.s - 1.0, b);
    const double gap = std::abs(out.defect - candidate);
    // integer s - 1 makes the branches coincide; keep the earlier one on ties
    if (gap < best - 0.01 * out.error_budget) {
      best = gap;
      out.predicted = candidate;
      out.matched_branch = b;
    }
  }
  if (!(best <= 10.0 * out.error_budget)) {
    std::ostringstream os;
    os << "no branch of log^{s-1}(w) matches the defect " << out.defect.real() << (out.defect.imag() < 0 ? "" : "+")
       << out.defect.imag() << "i within " << 10.0 * out.error_budget << " (closest misses by " << best << ")";
    fail(ErrorCode::NoBranchMatch, os.str());
  }
  return out;
}

}  // namespace citer
