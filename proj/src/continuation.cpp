#include "citer/continuation.hpp"

#include <cmath>
#include <sstream>

#include "citer/error.hpp"

namespace citer {

namespace {

constexpr double kRichardsonStep = 1e-3;

void require_meromorphic(const SeriesModel& F) {
  if (!F.closed_form || !F.exp_meromorphic_at_0)
    fail(ErrorCode::NoClosedForm,
         F.label + ": continuation needs G(x) = F(e^{-x}) in closed form on a disc about x = 0");
}

/// sin(pi s), exactly zero at integers.
Complex sin_pi(Complex s) {
  const double n = std::round(s.real());
  const Complex r = std::sin(kPi * (s - n));
  return std::fmod(n, 2.0) == 0.0 ? r : -r;
}

bool near_integer(Complex s, double& n) {
  n = std::round(s.real());
  return std::abs(s - n) < 1e-12;
}

struct Pieces {
  Complex ray;     // \int_delta^X x^{s-1} G(x) dx
  Complex circle;  // i \int_0^{2pi} delta^s e^{i s (theta - pi)} G(delta e^{i theta}) d theta
  double error = 0.0;
};

Pieces contour_pieces(const SeriesModel& F, Complex s, double delta, double x_end, bool check_tail,
                      const QuadratureConfig& cfg) {
  Pieces p;
  const auto& G = F.exp_form;
  auto ray = [&](double x, double, double) { return std::exp((s - 1.0) * std::log(x)) * G(x); };
  if (x_end != delta) {
    const double lo = std::min(delta, x_end), hi = std::max(delta, x_end);
    const QuadResult r = quad_finite(EndpointIntegrand(ray), lo, hi, cfg);
    p.ray = x_end > delta ? r.value : -r.value;
    p.error += r.error;
  }
  const Complex delta_s = std::exp(s * std::log(delta));
  auto circle = [&](double theta, double, double) {
    return kI * delta_s * std::exp(kI * s * (theta - kPi)) * G(std::polar(delta, theta));
  };
  const QuadResult c = quad_finite(EndpointIntegrand(circle), 0.0, 2.0 * kPi, cfg);
  p.circle = c.value;
  p.error += c.error;
  if (check_tail) {
    const double at_end = std::abs(ray(x_end, x_end, 0.0));
    if (!(at_end <= cfg.rel_tol * std::max(std::abs(p.ray), std::abs(p.circle)))) {
      std::ostringstream os;
      os << "ray integrand is " << at_end << " at x_max = " << x_end;
      fail(ErrorCode::TailTooFat, os.str());
    }
  }
  return p;
}

/// Gamma(1-s)/(2 pi i) times the contour truncated at x_end.
ContinuationResult contour_value(const SeriesModel& F, Complex s, double delta, double x_end, bool check_tail,
                                 const QuadratureConfig& cfg) {
  const Pieces p = contour_pieces(F, s, delta, x_end, check_tail, cfg);
  const Complex h = 2.0 * kI * sin_pi(s) * p.ray + p.circle;
  const Complex factor = gamma(1.0 - s) / (2.0 * kPi * kI);
  ContinuationResult r;
  r.value = factor * h;
  r.error_estimate = std::abs(factor) * p.error;
  r.route = ContinuationRoute::Contour;
  return r;
}

}  // namespace

const char* route_name(ContinuationRoute r) {
  switch (r) {
    case ContinuationRoute::Contour: return "contour";
    case ContinuationRoute::Laurent: return "laurent";
    case ContinuationRoute::Derivative: return "derivative";
  }
  return "?";
}

double singularity_distance(const SeriesModel& F) {
  require_meromorphic(F);
  if (!F.rational) return 2.0 * kPi;
  double best = std::numeric_limits<double>::infinity();
  for (const Complex z : poly::roots(F.rational->den_z)) {
    const Complex x0 = -std::log(z);
    for (int m = -4; m <= 4; ++m) {
      const Complex x = x0 + 2.0 * kPi * kI * static_cast<double>(m);
      if (std::abs(x) > 1e-8) best = std::min(best, std::abs(x));
    }
  }
  return best;
}

double contour_radius(const SeriesModel& F, const ContourSpec& spec) {
  const double dist = singularity_distance(F);
  if (spec.delta == 0.0) return std::min(0.5, 0.5 * dist);
  if (!(spec.delta > 0.0) || spec.delta >= dist) {
    std::ostringstream os;
    os << "contour radius " << spec.delta << " must lie in (0, " << dist << ")";
    fail(ErrorCode::RadiusError, os.str());
  }
  return spec.delta;
}

Complex contour_H(const SeriesModel& F, Complex s, const ContourSpec& spec, const QuadratureConfig& cfg) {
  cfg.validate();
  const double delta = contour_radius(F, spec);
  const Pieces p = contour_pieces(F, s, delta, spec.x_max, true, cfg);
  return 2.0 * kI * sin_pi(s) * p.ray + p.circle;
}

ContinuationResult continue_L(const SeriesModel& F, Complex s, const ContourSpec& spec, const QuadratureConfig& cfg) {
  cfg.validate();
  const double delta = contour_radius(F, spec);
  double n;
  if (!near_integer(s, n) || n <= 0.0) return contour_value(F, s, delta, spec.x_max, true, cfg);

  // Gamma(1-s) has a pole; L(F) has one iff G has an x^{-n} term
  const LaurentCoefficients c =
      circle_coefficients(F.exp_form, 0.0, -static_cast<int>(n), -static_cast<int>(n), delta, cfg);
  if (std::abs(c.at(-static_cast<int>(n))) > 1e-9 + 10.0 * c.error_estimate) {
    std::ostringstream os;
    os << F.label << ": L(F) has a pole at s = " << n << " (coefficient of x^" << -n << " in G is "
       << c.at(-static_cast<int>(n)) << ")";
    fail(ErrorCode::PositiveIntegerPole, os.str());
  }
  // fourth-order symmetric Richardson from s = n +- h, n +- 2h
  const double h = kRichardsonStep;
  auto at = [&](double dx) { return contour_value(F, s + dx, delta, spec.x_max, true, cfg); };
  const auto a1 = at(h), a2 = at(-h), b1 = at(2 * h), b2 = at(-2 * h);
  ContinuationResult r;
  const Complex near = 0.5 * (a1.value + a2.value), far = 0.5 * (b1.value + b2.value);
  r.value = (4.0 * near - far) / 3.0;
  r.error_estimate = std::abs(near - far) / 3.0 * h * h + a1.error_estimate + b1.error_estimate;
  r.route = ContinuationRoute::Contour;
  return r;
}

ContinuationResult value_at_negative_integer(const SeriesModel& F, int k, const ContourSpec& spec,
                                             const QuadratureConfig& cfg) {
  if (k < 0) fail(ErrorCode::InvalidArgument, "k must be a non-negative integer");
  const double delta = contour_radius(F, spec);
  const LaurentCoefficients c = circle_coefficients(F.exp_form, 0.0, k, k, delta, cfg);
  const double fact = std::tgamma(k + 1.0);
  ContinuationResult r;
  r.value = (k % 2 == 0 ? 1.0 : -1.0) * fact * c.at(k);
  r.error_estimate = fact * c.error_estimate;
  r.route = ContinuationRoute::Laurent;
  return r;
}

ContinuationResult derivative_at_negative_integer(const SeriesModel& F, int k) {
  ContinuationResult r;
  r.value = iterated_derivative_at_1(F, k);
  r.route = ContinuationRoute::Derivative;
  return r;
}

Complex residue_at_1(const SeriesModel& F, const ContourSpec& spec, const QuadratureConfig& cfg) {
  const double delta = contour_radius(F, spec);
  return circle_coefficients(F.exp_form, 0.0, -1, -1, delta, cfg).at(-1);
}

Complex laurent_residue_sum(const SeriesModel& F) {
  if (!F.laurent_at_1) fail(ErrorCode::NoLaurentData, F.label + " has no Laurent expansion at z = 1");
  const LaurentCoefficients& l = *F.laurent_at_1;
  Complex sum = 0;
  for (int n = l.min_order; n <= -1; ++n) sum += ((1 - n) % 2 == 0 ? 1.0 : -1.0) * l.at(n);
  return sum;
}

ContinuationResult w_truncated_continuation(const SeriesModel& F, double w, int k, const ContourSpec& spec,
                                            const QuadratureConfig& cfg) {
  if (!(w > 0.0 && w < 1.0)) fail(ErrorCode::InvalidArgument, "w must lie in (0, 1)");
  if (k < 0) fail(ErrorCode::InvalidArgument, "k must be a non-negative integer");
  const double delta = contour_radius(F, spec);
  return contour_value(F, -static_cast<double>(k), delta, -std::log(w), false, cfg);
}

BoundednessProbe boundedness_probe(const SeriesModel& F, const ContourSpec& spec, const QuadratureConfig& cfg) {
  BoundednessProbe p;
  for (int j = 0; j < 8; ++j) {
    const Complex dir = std::polar(1.0, 2.0 * kPi * (j + 0.5) / 8.0);  // avoids the real axis
    p.max_outer = std::max(p.max_outer, std::abs(continue_L(F, 1.0 + 0.1 * dir, spec, cfg).value));
    p.max_inner = std::max(p.max_inner, std::abs(continue_L(F, 1.0 + 0.05 * dir, spec, cfg).value));
  }
  p.bounded = p.max_inner < 1.5 * p.max_outer;
  return p;
}

namespace {

CharacterTable kronecker_character(int d) {
  if (d >= 0 || !is_fundamental_discriminant(d))
    fail(ErrorCode::InvalidArgument, "needs a negative fundamental discriminant");
  CharacterTable t;
  t.modulus = -d;
  for (int a = 1; a <= t.modulus; ++a) t.values.push_back(static_cast<double>(kronecker(d, a)));
  t.primitive = true;
  return t;
}

}  // namespace

Complex dedekind_residue(int discriminant, const ContourSpec& spec, const QuadratureConfig& cfg) {
  const SeriesModel chi = from_character(kronecker_character(discriminant));
  const SeriesModel q = from_rational(Poly{0.0, 1.0}, Poly{1.0, -1.0}, "F_Q");
  return residue_at_1(q, spec, cfg) * continue_L(chi, 1.0, spec, cfg).value;
}

double class_number_residue(int discriminant) {
  const double h = static_cast<double>(reduced_forms(discriminant).size());
  return 2.0 * kPi * h / (unit_count(discriminant) * std::sqrt(static_cast<double>(-discriminant)));
}

}  // namespace citer
