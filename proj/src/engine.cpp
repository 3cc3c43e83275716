#include "citer/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "citer/error.hpp"

namespace citer {

namespace {

constexpr long kGapTermCap = 400'000;

/// x^{s-1} / Gamma(s) for x > 0.
Complex mellin_kernel(double x, Complex s, Complex inv_gamma) {
  return std::exp((s - 1.0) * std::log(x)) * inv_gamma;
}

QuadResult add(QuadResult a, const QuadResult& b) {
  a.value += b.value;
  a.error += b.error;
  a.levels = std::max(a.levels, b.levels);
  a.evaluations += b.evaluations;
  return a;
}

/// Quadrature over (a, infinity) for a in [0, 1]: [a, 1] plus [1, cutoff].
QuadResult halfline_from(const EndpointIntegrand& f, double a, const QuadratureConfig& cfg) {
  if (a == 0.0) return quad_halfline(f, cfg);
  QuadResult head = a < 1.0 ? quad_finite(f, a, 1.0, cfg) : QuadResult{};
  QuadResult tail =
      quad_finite([&f](double x, double, double right) { return f(x, x, right); }, 1.0, cfg.tail_cutoff, cfg);
  QuadResult r = add(head, tail);
  const double at_cutoff = std::abs(f(cfg.tail_cutoff, cfg.tail_cutoff, 0.0));
  if (!(at_cutoff <= cfg.rel_tol * std::abs(r.value) + 1e-300))
    fail(ErrorCode::TailTooFat, "integrand does not decay below rel_tol at the cutoff");
  return r;
}

/// Half-line quadrature of a slowly decaying integrand, with x = y / rate.
QuadResult halfline_scaled(const EndpointIntegrand& f, double rate, const QuadratureConfig& cfg) {
  if (rate >= 1.0) return quad_halfline(f, cfg);
  auto g = [&](double y, double left, double right) { return f(y / rate, left / rate, right / rate) / rate; };
  QuadResult r = quad_halfline(EndpointIntegrand(g), cfg);
  return r;
}

/// 1/Gamma(s) \int_0^inf x^{s-1} G(x) dx. For order k >= 1, G ~ x^{-k-1}
/// overflows near 0, so [0, x_min] is dropped where its bound is below
/// 0.01 rel_tol; the constant is read off G at x = 1e-8.
QuadResult mellin_halfline(const std::function<Complex(Complex)>& G, Complex s, double order,
                           const QuadratureConfig& cfg) {
  const Complex inv_gamma = rgamma(s);
  auto f = [&](double x, double, double) { return mellin_kernel(x, s, inv_gamma) * G(x); };
  if (order < 1.0) return quad_halfline(EndpointIntegrand(f), cfg);
  const double p = s.real() - order - 1.0;
  const double probe = 1e-8;
  const double c = 2.0 * std::abs(G(probe)) * std::pow(probe, order + 1.0);
  const double x_min = std::min(0.5, std::pow(0.01 * cfg.rel_tol * p / (c * std::abs(inv_gamma)), 1.0 / p));
  QuadResult r = halfline_from(EndpointIntegrand(f), x_min, cfg);
  r.error += 0.01 * cfg.rel_tol;
  return r;
}

QuadratureConfig serial(QuadratureConfig cfg) {
  cfg.parallel = false;
  return cfg;
}

/// Remainders R on each segment: integral of dz/z from a point to the end.
struct Remainder {
  const Path& path;
  std::vector<Complex> after;  // integral over segments i+1 .. end

  explicit Remainder(const Path& p) : path(p), after(p.segments.size(), 0.0) {
    for (std::size_t i = p.segments.size(); i-- > 1;)
      after[i - 1] = after[i] + segment_integral(p.segments[i], FormSpec::log(), Param::start(), Param::end());
  }
  Complex operator()(std::size_t i, Param p) const {
    return segment_integral(path.segments[i], FormSpec::log(), p, Param::end()) + after[i];
  }
};

std::string fmt(Complex z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real();
  if (z.imag() != 0) os << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

}  // namespace

// --------------------------------------------------------- path integrals

std::vector<QuadResult> chen_power_integral_parts(const Path& path, const FormSpec& alpha, Complex t,
                                                 const QuadratureConfig& cfg) {
  cfg.validate();
  if (path.segments.empty()) fail(ErrorCode::InvalidArgument, "empty path");
  if (t.real() <= -1.0) fail(ErrorCode::ConvergenceConstraint, "exponent needs Re(t) > -1");
  check_avoids_singularities(path, alpha);
  if (alpha.kind != FormSpec::Kind::Log) check_avoids_singularities(path, FormSpec::log());
  std::vector<QuadResult> parts(path.segments.size());
  if (t == 0.0) {
    for (std::size_t i = 0; i < path.segments.size(); ++i)
      parts[i].value = segment_integral(path.segments[i], alpha, Param::start(), Param::end(), cfg);
    return parts;
  }
  const Remainder remainder(path);
  const Complex inv_gamma = rgamma(t + 1.0);
  for (std::size_t i = 0; i < path.segments.size(); ++i) {
    const PathSegment& seg = path.segments[i];
    if (seg.start() == seg.end() && seg.kind == PathSegment::Kind::Line) continue;
    auto f = [&](double, double left, double right) {
      const Param p{left, right};
      return principal_power(remainder(i, p), t) * form_density(alpha, seg, p) * seg.velocity(p);
    };
    parts[i] = quad_finite(EndpointIntegrand(f), 0.0, 1.0, cfg);
    parts[i].value *= inv_gamma;
    parts[i].error *= std::abs(inv_gamma);
  }
  return parts;
}

QuadResult chen_power_integral(const Path& path, const FormSpec& alpha, Complex t,
                               const QuadratureConfig& cfg) {
  if (t == 0.0) {
    cfg.validate();
    if (path.segments.empty()) fail(ErrorCode::InvalidArgument, "empty path");
    check_avoids_singularities(path, FormSpec::log());
    QuadResult r;
    r.value = integrate_form(path, alpha, cfg);
    return r;
  }
  QuadResult total;
  for (const QuadResult& part : chen_power_integral_parts(path, alpha, t, cfg)) total = add(total, part);
  return total;
}

Complex polylog_integral(Complex s, Complex w, const Path& path, const QuadratureConfig& cfg) {
  if (s.real() <= 0.0) fail(ErrorCode::ConvergenceConstraint, "polylog integral needs Re(s) > 0");
  if (w == 0.0) return 0.0;
  if (std::abs(path.start()) > 1e-15 || std::abs(path.end() - w) > 1e-12 * std::max(1.0, std::abs(w)))
    fail(ErrorCode::InvalidArgument, "polylog path must run from 0 to w");
  return chen_power_integral(path, FormSpec::one_minus(), s - 1.0, cfg).value;
}

Complex polylog_integral(Complex s, Complex w, const QuadratureConfig& cfg) {
  if (w == 0.0) return 0.0;
  return polylog_integral(s, w, Path::line(0.0, w), cfg);
}

// ------------------------------------------------- exponential coordinates

QuadResult gap_series_integral(const SeriesModel& F, int k, Complex t, const QuadratureConfig& cfg) {
  cfg.validate();
  if (k < 1) fail(ErrorCode::InvalidArgument, "gap exponent must be a positive integer");
  const double r = F.bieberbach_order, c = F.bieberbach_constant, sigma = t.real();
  const double a = (r + 1.0) / k;
  if (sigma <= a) fail(ErrorCode::ConvergenceConstraint, "gap integral needs Re(t) > (k_F + 1)/k");
  const Complex inv_gamma = rgamma(t);
  // sum_n n^r e^{-n^k x} <= Gamma(a) / (k x^a) + max term, integrated on [0, x_c]
  const double m = r > 0 ? std::pow(r / (k * std::exp(1.0)), r / k) : 1.0;
  auto bound = [&](double xc) {
    double b = std::tgamma(a) / k * std::pow(xc, sigma - a) / (sigma - a);
    b += m * std::pow(xc, sigma - r / k) / (sigma - r / k);
    return c * std::abs(inv_gamma) * b;
  };
  const double target = 0.1 * cfg.rel_tol;
  double lo = -700.0, hi = 0.0;  // log x_c
  if (bound(1.0) <= target) {
    lo = 0.0;
  } else {
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (bound(std::exp(mid)) > target ? hi : lo) = mid;
    }
  }
  double xc = std::exp(lo);
  const double margin = 42.0 + r * 20.0;
  auto terms_for = [&](double x) { return std::ceil(std::pow(margin / x, 1.0 / k)); };
  const long cap = std::min(kGapTermCap, F.coefficient_cap);
  double slack = bound(xc);
  if (terms_for(xc) > static_cast<double>(cap)) {
    xc = margin / std::pow(static_cast<double>(cap), k);
    slack = bound(xc);
    if (slack > std::max(1e4 * cfg.rel_tol, 1e-6)) {
      std::ostringstream os;
      os << F.label << ": truncation bound " << slack << " near x = 0 exceeds tolerance with "
         << cap << " terms";
      fail(ErrorCode::SlowConvergence, os.str());
    }
  }
  const long n_max = std::min<long>(cap, static_cast<long>(terms_for(xc)));
  const std::vector<Complex> coeff = F.coefficients(n_max);

  auto series = [&](double x) {
    const long n_use = std::min<long>(n_max, static_cast<long>(terms_for(x)));
    Complex sum = 0;
    if (k == 1) {
      const double q = std::exp(-x);
      double p = 1.0;
      for (long n = 1; n <= n_use; ++n) {
        p *= q;
        sum += coeff[static_cast<std::size_t>(n - 1)] * p;
      }
    } else {
      for (long n = 1; n <= n_use; ++n)
        sum += coeff[static_cast<std::size_t>(n - 1)] * std::exp(-std::pow(static_cast<double>(n), k) * x);
    }
    return sum;
  };
  auto f = [&](double x, double, double) { return mellin_kernel(x, t, inv_gamma) * series(x); };
  QuadResult res = halfline_from(EndpointIntegrand(f), xc, cfg);
  res.error += slack;
  return res;
}

QuadResult power_iterated_integral_q(const SeriesModel& F, Complex s, double lower,
                                     const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(lower >= 0.0 && lower < 1.0)) fail(ErrorCode::InvalidArgument, "lower endpoint must lie in [0, 1)");
  if (s.real() <= 0.0) fail(ErrorCode::ConvergenceConstraint, "needs Re(s) > 0");
  const Complex inv_gamma = rgamma(s);
  if (lower > 0.0) {
    const double x_max = -std::log(lower);
    auto f = [&](double x, double, double) { return mellin_kernel(x, s, inv_gamma) * F.exp_form(x); };
    return quad_finite(EndpointIntegrand(f), 0.0, x_max, cfg);
  }
  if (s.real() <= F.bieberbach_order + 1.0) {
    std::ostringstream os;
    os << "Re(s) = " << s.real() << " must exceed k + 1 = " << F.bieberbach_order + 1.0 << " for " << F.label;
    fail(ErrorCode::ConvergenceConstraint, os.str());
  }
  if (!F.closed_form) return gap_series_integral(F, 1, s, cfg);
  return mellin_halfline(F.exp_form, s, F.bieberbach_order, cfg);
}

Complex power_iterated_integral(const SeriesModel& F, Complex s, double lower, const QuadratureConfig& cfg) {
  return power_iterated_integral_q(F, s, lower, cfg).value;
}

// ------------------------------------------------------------------ checks

CheckResult iterativity_check(Complex v, Complex u, double t, const FormSpec& beta, const QuadratureConfig& cfg) {
  cfg.validate();
  if (v.real() <= 0 || u.real() <= 0) fail(ErrorCode::ConvergenceConstraint, "needs Re(v), Re(u) > 0");
  if (!(t >= 0.0 && t < 1.0)) fail(ErrorCode::InvalidArgument, "t must lie in [0, 1)");
  const Path path = Path::line(t, 1.0);
  const PathSegment& seg = path.segments.front();
  const QuadratureConfig inner = serial(cfg);
  const Complex total = integrate_form(path, beta, cfg);
  const Complex lhs = principal_power(total, v + u - 1.0) * rgamma(v + u);

  const bool exact = beta.kind != FormSpec::Kind::Weighted;
  auto f = [&](double, double left, double right) {
    const Param p{left, right};
    const Complex a = exact ? segment_integral(seg, beta, Param::start(), p)
                            : segment_integral(seg, beta, Param::start(), p, inner);
    const Complex b = exact ? segment_integral(seg, beta, p, Param::end())
                            : segment_integral(seg, beta, p, Param::end(), inner);
    return principal_power(a, v - 1.0) * principal_power(b, u - 1.0) * form_density(beta, seg, p) *
           seg.velocity(p);
  };
  const Complex rhs = quad_finite(EndpointIntegrand(f), 0.0, 1.0, cfg).value * rgamma(v) * rgamma(u);
  auto check = make_check("iterativity v=" + fmt(v) + " u=" + fmt(u), rhs, lhs,
                          std::max(1e-8, 100 * cfg.rel_tol) * std::max(1.0, std::abs(lhs)),
                          "beta-function identity for the iterated power");
  return check;
}

CheckResult iterativity_check(Complex v, Complex u, double t, const SeriesModel& F, const QuadratureConfig& cfg) {
  return iterativity_check(v, u, t, FormSpec::weighted(F), cfg);
}

CoproductResult comultiplication_eval(const Path& gamma, const Path& delta, const FormSpec& alpha, Complex s,
                                      int n_terms, const QuadratureConfig& cfg) {
  CoproductResult out = comultiplication_rhs(gamma, delta, alpha, s, n_terms, cfg);
  out.lhs = chen_power_integral(concat(gamma, delta), alpha, s, cfg).value;
  return out;
}

CoproductResult comultiplication_rhs(const Path& gamma, const Path& delta, const FormSpec& alpha, Complex s,
                                     int n_terms, const QuadratureConfig& cfg) {
  cfg.validate();
  if (n_terms < 0) fail(ErrorCode::InvalidArgument, "truncation must be >= 0");
  CoproductResult out;
  out.lhs = std::numeric_limits<double>::quiet_NaN();
  concat(gamma, delta);  // continuity
  const Complex delta_alpha = chen_power_integral(delta, alpha, s, cfg).value;
  const Complex d = integrate_form(delta, FormSpec::log(), cfg);
  const double scale = std::max(1.0, std::abs(d));

  if (std::abs(d) <= 1e-13 * scale) {
    out.degenerate = true;
    out.rhs = delta_alpha + chen_power_integral(gamma, alpha, s, cfg).value;
    return out;
  }

  // dominance: sup over z on gamma of |\int_{gamma^{-1} -> z} beta|, which is
  // the remainder from z to the end of gamma
  const Remainder remainder(gamma);
  double sup = 0.0;
  const int samples = 64;
  for (std::size_t i = 0; i < gamma.segments.size(); ++i) {
    for (int j = 0; j <= samples; ++j) {
      const double tt = static_cast<double>(j) / samples;
      double value;
      try {
        value = std::abs(remainder(i, Param{tt, 1.0 - tt}));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DivergentIntegral) throw;
        value = std::numeric_limits<double>::infinity();
      }
      sup = std::max(sup, value);
    }
  }
  out.ratio = sup / std::abs(d);
  if (!(out.ratio * 1.1 < 1.0)) {
    std::ostringstream os;
    os << "dominance fails: sup |int_{gamma^-1 -> z} dz/z| = " << sup << " against |int_delta dz/z| = "
       << std::abs(d) << " (10% margin)";
    fail(ErrorCode::DominationViolated, os.str());
  }

  std::vector<Complex> terms;
  for (int n = 0; n <= n_terms; ++n) {
    const Complex gamma_part = chen_power_integral(gamma, alpha, static_cast<double>(n), cfg).value;
    // \int_delta beta^{s-n} = D^{s-n} / Gamma(s-n+1), by the reinterpretation
    const Complex delta_part = principal_power(d, s - static_cast<double>(n)) * rgamma(s - static_cast<double>(n) + 1.0);
    terms.push_back(gamma_part * delta_part);
  }
  out.terms = n_terms + 1;
  out.rhs = delta_alpha + pairwise_sum(terms);
  const double last = std::abs(terms.back());
  out.tail_estimate = last * out.ratio / (1.0 - out.ratio);
  if (n_terms >= 2) {
    const double prev = std::abs(terms[terms.size() - 2]);
    if (last > prev && last > 1e-300)
      fail(ErrorCode::TailNotSmall, "series terms are still growing at the truncation");
  }
  return out;
}

CheckResult homotopy_invariance_check(const FormSpec& alpha, Complex s, const Path& path_a, const Path& path_b,
                                      double tolerance, const QuadratureConfig& cfg) {
  const Complex a = chen_power_integral(path_a, alpha, s, cfg).value;
  const Complex b = chen_power_integral(path_b, alpha, s, cfg).value;
  auto check = make_check("homotopy s=" + fmt(s), b, a, tolerance, "homotopy invariance corollary");
  // dominance hypothesis: |\int_a beta| > sup |\int_{a^{-1} -> z} beta|
  std::string note;
  try {
    const Remainder remainder(path_a);
    const double whole = std::abs(remainder(0, Param::start()));
    double sup = 0.0;
    for (std::size_t i = 0; i < path_a.segments.size(); ++i)
      for (int j = 1; j <= 64; ++j) sup = std::max(sup, std::abs(remainder(i, Param::at(j / 64.0))));
    note = whole > sup ? "dominance hypothesis holds" : "dominance hypothesis fails; checked numerically only";
  } catch (const Error&) {
    note = "tangential start: dominance hypothesis does not apply; checked numerically only";
  }
  check.note = note;
  return check;
}

CheckResult haar_check(const SeriesModel& F, double a, Complex s, const QuadratureConfig& cfg) {
  if (!(a > 0.0)) fail(ErrorCode::InvalidArgument, "Haar scaling must be positive");
  const Complex expected = power_iterated_integral(F, s, 0.0, cfg);
  if (s.real() <= F.bieberbach_order + 1.0) fail(ErrorCode::ConvergenceConstraint, "needs Re(s) > k + 1");
  // a^s / Gamma(s) \int x^{s-1} G(a x) dx
  const auto scaled = [&F, a](Complex x) { return F.exp_form(a * x); };
  Complex computed;
  if (F.closed_form)
    computed = std::exp(s * std::log(a)) * mellin_halfline(scaled, s, F.bieberbach_order, cfg).value;
  else
    computed = gap_series_integral(F, 1, s, cfg).value;  // partial sums: scaling is exact termwise
  std::ostringstream name;
  name << "haar a=" << a << " s=" << fmt(s);
  return make_check(name.str(), computed, expected, std::max(1e-9, 100 * cfg.rel_tol) * std::max(1.0, std::abs(expected)),
                    "power invariance under z -> z^a");
}

CheckResult multiplicative_iterativity_eval(const SeriesModel& F, int k, Complex s, const QuadratureConfig& cfg) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be a positive integer");
  if (s.real() <= F.bieberbach_order + k)
    fail(ErrorCode::ConvergenceConstraint, "multiplicative iterativity needs Re(s) > k_F + k");
  const Complex expected = power_iterated_integral(F, s, 0.0, cfg);
  const QuadResult gap = gap_series_integral(F, k, s / static_cast<double>(k), cfg);
  return make_check("multiplicative k=" + std::to_string(k) + " s=" + fmt(s), gap.value, expected,
                    std::max(1e-6, 10 * gap.error + 100 * cfg.rel_tol), "gap transform with exponent s/k");
}

// ----------------------------------------------------------------- depth 2

ExpWeight ExpWeight::from_model(const SeriesModel& F) {
  if (!F.exp_form) fail(ErrorCode::NoClosedForm, F.label + " has no exponential form");
  return {F.exp_form, F.bieberbach_order, F.label};
}

ExpWeight ExpWeight::hurwitz(Complex z) {
  if (z.real() <= 0) fail(ErrorCode::InvalidArgument, "Hurwitz parameter needs Re(z) > 0");
  return {[z](Complex x) { return std::exp(-z * x) / -citer::expm1(-x); }, 0.0, "hurwitz",
          std::min(1.0, z.real())};
}

QuadResult depth_two_integral(const ExpWeight& outer, Complex s_outer, const ExpWeight& inner, Complex s_inner,
                              const QuadratureConfig& cfg) {
  cfg.validate();
  if (s_inner.real() <= 0.0) fail(ErrorCode::ConvergenceConstraint, "inner exponent needs Re > 0");
  if (s_outer.real() <= outer.order + 1.0 || (s_inner + s_outer).real() <= inner.order + outer.order + 2.0) {
    std::ostringstream os;
    os << "depth-2 integral needs Re(s_out) > k_out + 1 and Re(s_in + s_out) > k_in + k_out + 2; got s_out = "
       << fmt(s_outer) << ", s_in = " << fmt(s_inner);
    fail(ErrorCode::ConvergenceConstraint, os.str());
  }
  const Complex g_in = rgamma(s_inner), g_out = rgamma(s_outer);
  const QuadratureConfig inner_cfg = serial(cfg);
  // G_in(x + y) has its pole at y = -x, so for small x the range is split at
  // y = x and [x, 1] is taken in the variable log y
  auto h = [&](double x) {
    auto f = [&](double y, double, double) { return mellin_kernel(y, s_inner, g_in) * inner.g(x + y); };
    if (x >= 1.0) return halfline_scaled(EndpointIntegrand(f), inner.decay, inner_cfg).value;
    auto logvar = [&](double v, double, double) {
      const double y = std::exp(v);
      return std::exp(s_inner * v) * g_in * inner.g(x + y);
    };
    QuadResult r = quad_finite(EndpointIntegrand(f), 0.0, x, inner_cfg);
    r = add(r, quad_finite(EndpointIntegrand(logvar), std::log(x), 0.0, inner_cfg));
    auto tail = [&](double y, double, double) { return f(1.0 + y, 1.0 + y, 0.0); };
    return r.value + halfline_scaled(EndpointIntegrand(tail), inner.decay, inner_cfg).value;
  };
  // each outer node is visited exactly once per refinement, so h is
  // evaluated once per abscissa without an explicit cache
  auto f = [&](double x, double, double) { return mellin_kernel(x, s_outer, g_out) * outer.g(x) * h(x); };
  return halfline_scaled(EndpointIntegrand(f), outer.decay + inner.decay, cfg);
}

QuadResult weight_power_integral(const ExpWeight& w, Complex s, const QuadratureConfig& cfg) {
  if (s.real() <= w.order + 1.0) {
    std::ostringstream os;
    os << "Re(s) = " << s.real() << " must exceed k + 1 = " << w.order + 1.0 << " for " << w.label;
    fail(ErrorCode::ConvergenceConstraint, os.str());
  }
  const Complex inv_gamma = rgamma(s);
  auto f = [&](double x, double, double) { return mellin_kernel(x, s, inv_gamma) * w.g(x); };
  return halfline_scaled(EndpointIntegrand(f), w.decay, cfg);
}

Complex multiple_iterated_integral(const std::vector<SeriesModel>& models, const std::vector<Complex>& s,
                                   const QuadratureConfig& cfg) {
  if (models.size() != s.size() || models.empty())
    fail(ErrorCode::InvalidArgument, "need one exponent per model");
  if (models.size() > 2) fail(ErrorCode::DepthUnsupported, "depth above 2 is not evaluated");
  if (models.size() == 1) return power_iterated_integral(models[0], s[0], 0.0, cfg);
  return depth_two_integral(ExpWeight::from_model(models[0]), s[0], ExpWeight::from_model(models[1]), s[1], cfg)
      .value;
}

Complex fractional_integral(const std::function<Complex(double)>& f, Complex s, double x, const QuadratureConfig& cfg) {
  if (s.real() <= 0.0) fail(ErrorCode::ConvergenceConstraint, "fractional order needs Re(s) > 0");
  if (!(x > 0.0)) fail(ErrorCode::InvalidArgument, "fractional integral needs x > 0");
  const Complex inv_gamma = rgamma(s);
  auto g = [&](double y, double, double right) {
    // right = x - y, formed without cancellation
    return mellin_kernel(y, s, inv_gamma) * f(right);
  };
  return quad_finite(EndpointIntegrand(g), 0.0, x, cfg).value;
}

QuadResult dual_power_integral(const std::function<Complex(double, double)>& h, Complex s, const QuadratureConfig& cfg) {
  if (s.real() <= 0.0) fail(ErrorCode::ConvergenceConstraint, "needs Re(s) > 0");
  const Complex inv_gamma = rgamma(s);
  auto f = [&](double t, double left, double right) {
    const double minus_log = t < 0.5 ? -std::log1p(-left) : -std::log(right);
    return mellin_kernel(minus_log, s, inv_gamma) * h(left, right);
  };
  return quad_finite(EndpointIntegrand(f), 0.0, 1.0, cfg);
}

}  // namespace citer
