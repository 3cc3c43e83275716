#include "citer/zeta.hpp"

#include <sstream>

#include "citer/engine.hpp"
#include "citer/error.hpp"

namespace citer {

namespace {

void require_above(Complex s, double bound, const char* what) {
  if (s.real() > bound) return;
  std::ostringstream os;
  os << what << " needs Re(s) > " << bound << ", got " << s.real();
  fail(ErrorCode::ConvergenceConstraint, os.str());
}

}  // namespace

SeriesModel riemann_weight() {
  return from_rational(Poly{0.0, 1.0}, Poly{1.0, -1.0}, "F_Q");
}

Complex zeta(Complex s, const QuadratureConfig& cfg) {
  require_above(s, 1.0, "zeta");
  return power_iterated_integral(riemann_weight(), s, 0.0, cfg);
}

Complex zeta_dual(Complex s, const QuadratureConfig& cfg) {
  require_above(s, 1.0, "zeta");
  return dual_power_integral([](double t, double) -> Complex { return 1.0 / t; }, s, cfg).value;
}

Complex completed_Z(Complex s, const QuadratureConfig& cfg) {
  require_above(s, 1.0, "completed zeta");
  // the primitive of -log x dx/(2 pi x) from x to 1 is (log x)^2 / (4 pi);
  // in u = -log x the weight dx/(1-x) becomes du / (e^u - 1)
  const Complex e = (s - 1.0) / 2.0;
  const Complex inv_gamma = rgamma(e + 1.0);
  auto f = [&](double u, double, double) -> Complex {
    return principal_power(u * u / (4.0 * kPi), e) / std::expm1(u);
  };
  return inv_gamma * quad_halfline(EndpointIntegrand(f), cfg).value;
}

Complex completed_Z_product(Complex s, const QuadratureConfig& cfg) {
  return std::exp(-s / 2.0 * std::log(kPi)) * gamma(s / 2.0) * zeta(s, cfg);
}

Complex dirichlet_L(Complex s, const CharacterTable& chi, const QuadratureConfig& cfg) {
  require_above(s, 1.0, "Dirichlet L by the integral");
  return power_iterated_integral(from_character(chi), s, 0.0, cfg);
}

Complex dirichlet_L_gap(Complex s, const CharacterTable& chi, int k, const QuadratureConfig& cfg) {
  const SeriesModel m = from_character(chi);
  require_above(s, m.bieberbach_order + k, "gap route");
  return gap_series_integral(m, k, s / static_cast<double>(k), cfg).value;
}

Complex mzv(const std::vector<Complex>& s, const QuadratureConfig& cfg) {
  const SeriesModel q = riemann_weight();
  return multiple_iterated_integral(std::vector<SeriesModel>(s.size(), q), s, cfg);
}

Complex hurwitz_mzv(const std::vector<Complex>& s, Complex z, const QuadratureConfig& cfg) {
  if (s.empty()) fail(ErrorCode::InvalidArgument, "empty exponent tuple");
  if (s.size() > 2) fail(ErrorCode::DepthUnsupported, "depth above 2 is not evaluated");
  const ExpWeight w = ExpWeight::hurwitz(z);
  if (s.size() == 2)
    return depth_two_integral(ExpWeight::from_model(riemann_weight()), s[0], w, s[1], cfg).value;
  return weight_power_integral(w, s[0], cfg).value;
}

Complex polylog(Complex s, Complex w, const QuadratureConfig& cfg) { return polylog_integral(s, w, cfg); }

Complex dedekind_zeta_transform(int discriminant, Complex s, const QuadratureConfig& cfg) {
  // nu(n) <= d(n) = O(n^eps), so G(x) ~ rho_K / x and the integral converges
  // for Re(s) > 1, past the wall Re(s) > 2 of the declared order k = 1
  require_above(s, 1.0, "Dedekind transform");
  const SeriesModel m = ideal_count_series(discriminant);
  const Complex inv_gamma = rgamma(s);
  auto f = [&](double x, double, double) { return std::exp((s - 1.0) * std::log(x)) * inv_gamma * m.exp_form(x); };
  return quad_halfline(EndpointIntegrand(f), cfg).value;
}

}  // namespace citer
