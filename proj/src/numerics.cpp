#include "citer/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "citer/error.hpp"
#include "citer/kernels.hpp"

namespace citer {

void QuadratureConfig::validate() const {
  auto bad = [](const char* what) { fail(ErrorCode::InvalidArgument, what); };
  if (!(rel_tol > 0)) bad("rel_tol must be positive");
  if (max_level < 1) bad("max_level must be at least 1");
  if (!(tail_cutoff > 1)) bad("tail_cutoff must exceed 1");
  if (!(circle_radius > 0)) bad("circle_radius must be positive");
  if (circle_points < 16 || (circle_points & (circle_points - 1)) != 0)
    bad("circle_points must be a power of two >= 16");
}

// ------------------------------------------------------------------ gamma

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Complex gamma_lanczos(Complex z) {
  // z with Re(z) >= 1/2
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

// sin(pi s) with exact zeros at integers and argument reduction
Complex sin_pi(Complex s) {
  const double re = s.real();
  const double n = std::round(re);
  const double r = re - n;  // in [-1/2, 1/2]
  const double sign = (static_cast<long long>(n) % 2 == 0) ? 1.0 : -1.0;
  const Complex reduced{r, s.imag()};
  return sign * std::sin(kPi * reduced);
}

}  // namespace

bool is_nonpositive_integer(Complex s) {
  return s.real() <= 0.5 && std::fabs(s.imag()) < 1e-14 &&
         std::fabs(s.real() - std::round(s.real())) < 1e-14;
}

Complex gamma(Complex s) {
  if (is_nonpositive_integer(s)) {
    std::ostringstream os;
    os << "Gamma has a pole at s = " << s.real();
    fail(ErrorCode::Pole, os.str());
  }
  if (s.real() < 0.5) return kPi / (sin_pi(s) * gamma_lanczos(1.0 - s));
  return gamma_lanczos(s);
}

Complex rgamma(Complex s) {
  if (is_nonpositive_integer(s)) return 0.0;
  if (s.real() < 0.5) return sin_pi(s) * gamma_lanczos(1.0 - s) / kPi;
  return 1.0 / gamma_lanczos(s);
}

Complex principal_power(Complex z, Complex s, int branch_offset) {
  if (z == 0.0) {
    if (s.real() > 0) return 0.0;
    fail(ErrorCode::ZeroBase, "zero base with non-positive real exponent");
  }
  const Complex log_z{std::log(std::abs(z)),
                      std::arg(z) + 2.0 * kPi * branch_offset};
  return std::exp(s * log_z);
}

Complex generalized_binomial(Complex s, int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "binomial index must be >= 0");
  Complex result = 1.0;
  for (int k = 0; k < n; ++k) result *= (s - static_cast<double>(k)) / static_cast<double>(k + 1);
  return result;
}

Complex log1p(Complex w) {
  const Complex u = 1.0 + w;
  if (u == 1.0) return w;
  if (std::abs(w) > 0.5) return std::log(u);
  return std::log(u) * w / (u - 1.0);
}

Complex expm1(Complex w) {
  const double a = w.real();
  const double b = w.imag();
  if (std::abs(w) > 0.5) return std::exp(w) - 1.0;
  // expm1(a + ib) = expm1(a) cos b - 2 sin^2(b/2) + i e^a sin b
  const double sb2 = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * sb2 * sb2, std::exp(a) * std::sin(b)};
}

namespace {

Complex pairwise_range(const Complex* p, std::size_t n) {
  if (n <= 8) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += p[i];
    return s;
  }
  const std::size_t m = n / 2;
  return pairwise_range(p, m) + pairwise_range(p + m, n - m);
}

}  // namespace

Complex pairwise_sum(const std::vector<Complex>& terms) {
  return pairwise_range(terms.data(), terms.size());
}

// ------------------------------------------------------------- quadrature

namespace {

double abs_total(const std::vector<Complex>& v) {
  std::vector<Complex> mags(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mags[i] = std::abs(v[i]);
  return pairwise_sum(mags).real();
}

QuadResult tanh_sinh(const EndpointIntegrand& f, double a, double b,
                     const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(b > a)) {
    if (a == b) return {};
    fail(ErrorCode::InvalidArgument, "quadrature interval must have a < b");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  Complex sum = 0.0;
  double abs_sum = 0.0;
  Complex previous = 0.0;
  QuadResult result;
  for (int level = 0; level <= cfg.max_level; ++level) {
    const auto nodes = kernels::tanh_sinh_nodes(a, b, level);
    const auto samples = cfg.parallel ? kernels::sample_parallel(f, nodes)
                                      : kernels::sample_serial(f, nodes);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (!std::isfinite(samples[i].real()) || !std::isfinite(samples[i].imag())) {
        std::ostringstream os;
        os << "non-finite integrand value at x = " << nodes[i].x;
        fail(ErrorCode::NoConvergence, os.str());
      }
    }
    sum += pairwise_sum(samples);
    abs_sum += abs_total(samples);
    result.evaluations += static_cast<long>(samples.size());
    const double h = std::ldexp(1.0, -level);
    const Complex current = h * sum;
    result.value = current;
    result.levels = level;
    if (level >= 3) {
      const double estimate = std::abs(current - previous);
      const double scale = std::max(std::abs(current), 1e-3 * h * abs_sum);
      const double tol = std::max(cfg.rel_tol * scale, 64.0 * eps * h * abs_sum);
      result.error = estimate;
      if (estimate <= tol) return result;
    }
    previous = current;
  }
  std::ostringstream os;
  os << "tanh-sinh did not reach rel_tol " << cfg.rel_tol << " by level "
     << cfg.max_level << " (last difference " << result.error << ")";
  fail(ErrorCode::NoConvergence, os.str());
}

}  // namespace

QuadResult quad_finite(const EndpointIntegrand& f, double a, double b,
                       const QuadratureConfig& cfg) {
  return tanh_sinh(f, a, b, cfg);
}

QuadResult quad_finite(const Integrand& f, double a, double b,
                       const QuadratureConfig& cfg) {
  return tanh_sinh([&f](double x, double, double) { return f(x); }, a, b, cfg);
}

QuadResult quad_halfline(const EndpointIntegrand& f, const QuadratureConfig& cfg) {
  cfg.validate();
  const double cutoff = cfg.tail_cutoff;
  const QuadResult head = tanh_sinh(f, 0.0, 1.0, cfg);
  const QuadResult tail = tanh_sinh(
      [&f](double x, double, double right) { return f(x, x, right); }, 1.0,
      cutoff, cfg);
  QuadResult r;
  r.value = head.value + tail.value;
  r.error = head.error + tail.error;
  r.levels = std::max(head.levels, tail.levels);
  r.evaluations = head.evaluations + tail.evaluations;
  const double at_cutoff = std::abs(f(cutoff, cutoff, 0.0));
  if (!(at_cutoff <= cfg.rel_tol * std::abs(r.value) + 1e-300)) {
    std::ostringstream os;
    os << "integrand is " << at_cutoff << " at the cutoff " << cutoff
       << "; does not decay below rel_tol";
    fail(ErrorCode::TailTooFat, os.str());
  }
  return r;
}

QuadResult quad_halfline(const Integrand& f, const QuadratureConfig& cfg) {
  return quad_halfline([&f](double x, double, double) { return f(x); }, cfg);
}

// ------------------------------------------------------------------ Cauchy

Complex LaurentCoefficients::at(int k) const {
  if (k < min_order || k > max_order()) return 0.0;
  return coefficients[static_cast<std::size_t>(k - min_order)];
}

LaurentCoefficients circle_coefficients(const ComplexFunction& g, Complex center,
                                        int min_order, int max_order,
                                        double radius,
                                        const QuadratureConfig& cfg) {
  cfg.validate();
  if (max_order < min_order)
    fail(ErrorCode::InvalidArgument, "max_order must be >= min_order");
  if (!(radius > 0)) fail(ErrorCode::RadiusError, "radius must be positive");
  const int n = cfg.circle_points;
  const auto samples = cfg.parallel
                           ? kernels::circle_samples_parallel(g, center, radius, n)
                           : kernels::circle_samples_serial(g, center, radius, n);
  for (const Complex& v : samples) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(ErrorCode::RadiusError,
           "function is not finite on the sampling circle");
  }
  LaurentCoefficients out;
  out.center = center;
  out.min_order = min_order;
  out.radius_used = radius;
  double peak = 0.0;
  for (const Complex& v : samples) peak = std::max(peak, std::abs(v));
  std::vector<Complex> terms(static_cast<std::size_t>(n));
  std::vector<Complex> half_terms(static_cast<std::size_t>(n / 2));
  for (int k = min_order; k <= max_order; ++k) {
    const double scale = std::pow(radius, -k);
    for (int j = 0; j < n; ++j) {
      long m = (static_cast<long>(k) * j) % n;
      if (m < 0) m += n;
      const Complex rot = std::polar(1.0, -2.0 * kPi * static_cast<double>(m) / n);
      terms[static_cast<std::size_t>(j)] = samples[static_cast<std::size_t>(j)] * rot;
      if (j % 2 == 0) half_terms[static_cast<std::size_t>(j / 2)] = terms[static_cast<std::size_t>(j)];
    }
    const Complex full = scale * pairwise_sum(terms) / static_cast<double>(n);
    const Complex half = scale * pairwise_sum(half_terms) / static_cast<double>(n / 2);
    out.coefficients.push_back(full);
    // level difference plus a rounding floor
    const double rounding = 16.0 * std::numeric_limits<double>::epsilon() * peak * scale;
    out.error_estimate = std::max(out.error_estimate, std::abs(full - half) + rounding);
  }
  return out;
}

}  // namespace citer
