#pragma once

#include <functional>
#include <string>
#include <vector>

#include "citer/check.hpp"
#include "citer/numerics.hpp"
#include "citer/paths.hpp"
#include "citer/series.hpp"

namespace citer {

// Conventions. For a path gamma and 1-forms alpha, beta = dz/z,
//   \int_gamma alpha beta^t = 1/Gamma(t+1) \int alpha(gamma(tau)) R(tau)^t,
// where R(tau) is the integral of beta from gamma(tau) to the end of the
// path, carried with its accumulated branch.

/// \int_path alpha (dz/z)^t for complex t with Re(t) > -1.
QuadResult chen_power_integral(const Path& path, const FormSpec& alpha, Complex t,
                               const QuadratureConfig& cfg = {});

/// Contribution of each segment to chen_power_integral, in path order.
std::vector<QuadResult> chen_power_integral_parts(const Path& path, const FormSpec& alpha, Complex t,
                                                 const QuadratureConfig& cfg = {});

/// \int_{[lower,1]} F(z) (dz/z)^s = 1/Gamma(s) \int_0^{-log lower} x^{s-1} G(x) dx.
QuadResult power_iterated_integral_q(const SeriesModel& F, Complex s, double lower = 0.0,
                                     const QuadratureConfig& cfg = {});
Complex power_iterated_integral(const SeriesModel& F, Complex s, double lower = 0.0,
                                const QuadratureConfig& cfg = {});

/// 1/Gamma(t) \int_0^inf x^{t-1} sum_n a_n e^{-n^k x} dx, evaluated from
/// truncated gap series with an analytic bound on [0, x_c] folded into the
/// error. k = 1 is the plain partial-sum route.
QuadResult gap_series_integral(const SeriesModel& F, int k, Complex t,
                               const QuadratureConfig& cfg = {});

/// Li_s(w) along a path from 0 to w: \int dx/(1-x) (dx/x)^{s-1}.
Complex polylog_integral(Complex s, Complex w, const Path& path, const QuadratureConfig& cfg = {});
Complex polylog_integral(Complex s, Complex w, const QuadratureConfig& cfg = {});

/// Both sides of the beta-function identity for \int_{[t,1]} beta^{v+u-1}.
CheckResult iterativity_check(Complex v, Complex u, double t, const FormSpec& beta,
                              const QuadratureConfig& cfg = {});
CheckResult iterativity_check(Complex v, Complex u, double t, const SeriesModel& F,
                              const QuadratureConfig& cfg = {});

struct CoproductResult {
  Complex lhs;
  Complex rhs;
  double tail_estimate = 0.0;
  double ratio = 0.0;  // sup |\int_{gamma^{-1} -> z} beta| / |\int_delta beta|
  int terms = 0;
  bool degenerate = false;  // \int_delta beta = 0
};

/// Both sides of the comultiplication formula for \int_{gamma delta} alpha beta^s.
CoproductResult comultiplication_eval(const Path& gamma, const Path& delta, const FormSpec& alpha,
                                      Complex s, int n_terms, const QuadratureConfig& cfg = {});
/// The series side only; lhs is left NaN. Used when the direct integral
/// would cross the branch cut of the principal power.
CoproductResult comultiplication_rhs(const Path& gamma, const Path& delta, const FormSpec& alpha,
                                     Complex s, int n_terms, const QuadratureConfig& cfg = {});

/// |\int_{a} alpha beta^s - \int_{b} alpha beta^s|; the note records whether
/// the dominance hypothesis holds for path_a.
CheckResult homotopy_invariance_check(const FormSpec& alpha, Complex s, const Path& path_a,
                                      const Path& path_b, double tolerance,
                                      const QuadratureConfig& cfg = {});

/// \int F(z^a) (a dz/z)^s against \int F(z) (dz/z)^s.
CheckResult haar_check(const SeriesModel& F, double a, Complex s, const QuadratureConfig& cfg = {});

/// \int ^kF(z) (dz/z)^{s/k} against \int F(z) (dz/z)^s.
CheckResult multiplicative_iterativity_eval(const SeriesModel& F, int k, Complex s,
                                            const QuadratureConfig& cfg = {});

/// Weight G(x) in exponential coordinates with its growth order at x = 0.
struct ExpWeight {
  std::function<Complex(Complex)> g;
  double order = 0.0;
  std::string label;
  double decay = 1.0;  // G(x) = O(e^{-decay x}) as x -> infinity

  static ExpWeight from_model(const SeriesModel& F);
  /// e^{-z x} / (1 - e^{-x}), the weight x^{z-1} dx/(1-x) in x = -log t.
  static ExpWeight hurwitz(Complex z);
};

/// Depth-2 integral: 1/Gamma(s_out) \int x^{s_out-1} G_out(x) h(x) dx with
/// h(x) = 1/Gamma(s_in) \int_0^inf y^{s_in-1} G_in(x + y) dy.
QuadResult depth_two_integral(const ExpWeight& outer, Complex s_outer, const ExpWeight& inner,
                              Complex s_inner, const QuadratureConfig& cfg = {});

/// 1/Gamma(s) \int_0^inf x^{s-1} G(x) dx for a single weight.
QuadResult weight_power_integral(const ExpWeight& w, Complex s, const QuadratureConfig& cfg = {});

/// Multiple iterated integral over [0,1]. Models and exponents are listed
/// from the endpoint 1 inwards (the usual multiple-zeta ordering), so that
/// F_Q twice with s = (s1, s2) is sum_{n > m} n^{-s1} m^{-s2}.
Complex multiple_iterated_integral(const std::vector<SeriesModel>& models,
                                   const std::vector<Complex>& s, const QuadratureConfig& cfg = {});

/// Riemann-Liouville I_s f(x) = 1/Gamma(s) \int_0^x y^{s-1} f(x - y) dy.
Complex fractional_integral(const std::function<Complex(double)>& f, Complex s, double x,
                            const QuadratureConfig& cfg = {});

/// 1/Gamma(s) \int_0^1 (-log(1-t))^{s-1} h(t, 1-t) dt: iteration over
/// dt/(1-t), with 1 - t supplied exactly near t = 1.
QuadResult dual_power_integral(const std::function<Complex(double, double)>& h, Complex s,
                               const QuadratureConfig& cfg = {});

}  // namespace citer
