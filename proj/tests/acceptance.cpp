// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria (capped at 100).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "citer/continuation.hpp"
#include "citer/engine.hpp"
#include "citer/error.hpp"
#include "citer/monodromy.hpp"
#include "citer/verify.hpp"
#include "citer/zeta.hpp"
#include "oracles.hpp"

using namespace citer;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  /// Records |a - b| against tol; returns the error.
  double expect(const std::string& what, Complex a, Complex b, double tol) {
    const double e = std::abs(a - b);
    if (!(e <= tol)) pass = false;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s %.2e/%.0e", detail.empty() ? "" : "; ", what.c_str(), e, tol);
    detail += buf;
    return e;
  }
  void require(const std::string& what, bool ok) {
    if (!ok) pass = false;
    detail += (detail.empty() ? "" : "; ") + what + (ok ? " ok" : " NOT MET");
  }
};

SeriesModel f_q() { return from_rational(Poly{0.0, 1.0}, Poly{1.0, -1.0}, "F_Q"); }

SeriesModel monomial(int k) {
  Poly num(static_cast<std::size_t>(k + 1), 0.0);
  num.back() = 1.0;
  return from_rational(num, Poly{1.0}, "z^" + std::to_string(k));
}

CharacterTable chi4() { return {4, {1.0, 0.0, -1.0, 0.0}, true}; }

MonodromyScenario scenario(Complex s, Complex w, double eps = 1e-3) {
  MonodromyScenario sc;
  sc.s = s;
  sc.w = w;
  sc.epsilon = eps;
  sc.eta = admissible_eta(w, eps);
  return sc;
}

Complex random_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  for (;;) {
    const Complex z{u(rng), u(rng)};
    const double d = std::abs(z.real() - std::round(z.real())) + std::abs(z.imag());
    const double d2 = std::abs(z.real() + 0.5 - std::round(z.real() + 0.5)) + std::abs(z.imag());
    if (std::abs(z) <= radius && d > 0.05 && d2 > 0.05) return z;
  }
}

const double pi = oracle::pi;

Outcome c1() {
  Outcome o;
  o.expect("zeta(2)", zeta(2.0), pi * pi / 6.0, 1e-8);
  o.expect("zeta(4)", zeta(4.0), std::pow(pi, 4) / 90.0, 1e-8);
  return o;
}

Outcome c2() {
  Outcome o;
  double worst = 0.0;
  for (int k = 1; k <= 8; ++k)
    for (Complex s : {Complex(2), Complex(2.5), Complex(3), Complex(2, 3)})
      worst = std::max(worst, std::abs(power_iterated_integral(monomial(k), s) -
                                       std::exp(-s * std::log(static_cast<double>(k)))));
  o.expect("worst of 32", worst, 0.0, 1e-9);
  return o;
}

Outcome c3() {
  Outcome o;
  const auto a = haar_check(monomial(1), 3.0, 2.5);
  const auto b = haar_check(monomial(2), 2.0, 3.0);
  o.expect("(z,3,2.5)", a.computed, a.expected, 1e-8);
  o.expect("(z^2,2,3)", b.computed, b.expected, 1e-8);
  return o;
}

Outcome c4() {
  Outcome o;
  o.expect("k=2 s=4", multiplicative_iterativity_eval(f_q(), 2, 4.0).computed, std::pow(pi, 4) / 90.0, 1e-6);
  o.expect("k=3 s=6", multiplicative_iterativity_eval(f_q(), 3, 6.0).computed, std::pow(pi, 6) / 945.0, 1e-5);
  return o;
}

Outcome c5() {
  Outcome o;
  const Complex z21 = mzv({2.0, 1.0}), z22 = mzv({2.0, 2.0});
  o.expect("zeta(2,1)", z21, oracle::apery, 1e-4);
  o.expect("zeta(2,2)", z22, std::pow(pi, 4) / 120.0, 1e-4);
  o.expect("double sum (2,1)", z21, oracle::mzv_double_sum(2.0, 1.0), 1e-4);
  o.expect("double sum (2,2)", z22, oracle::mzv_double_sum(2.0, 2.0), 1e-4);
  return o;
}

Outcome c6() {
  Outcome o;
  double worst = 0.0;
  for (int k = 0; k <= 5; ++k) {
    const double target = k == 0 ? -0.5 : -oracle::bernoulli(k + 1) / (k + 1);
    worst = std::max(worst, std::abs(value_at_negative_integer(f_q(), k).value - target));
  }
  o.expect("k=0..5", worst, 0.0, 1e-10);
  return o;
}

Outcome c7() {
  Outcome o;
  const Complex zm1 = value_at_negative_integer(f_q(), 1).value;
  const Complex d2 = iterated_derivative_at_1(katz_psi(2), 1);
  o.expect("a=2 exact 1/4", d2, 0.25, 1e-9);
  o.expect("a=2 vs (1-2^2) zeta(-1)", d2, (1.0 - 4.0) * zm1, 1e-9);
  o.expect("a=3 m=2 vs (1-3^3) zeta(-2)", iterated_derivative_at_1(katz_psi(3), 2),
           (1.0 - 27.0) * value_at_negative_integer(f_q(), 2).value, 1e-9);
  return o;
}

Outcome c8() {
  Outcome o;
  o.expect("Res F_Q", residue_at_1(f_q()), 1.0, 1e-10);
  o.expect("Res chi_4", residue_at_1(from_character(chi4())), 0.0, 1e-10);
  o.expect("rho_Q(i)", dedekind_residue(-4), pi / 4.0, 1e-8);
  return o;
}

Outcome c9() {
  Outcome o;
  for (double w : {0.3, 0.6})
    o.expect("w=" + std::to_string(w).substr(0, 3), w_truncated_continuation(f_q(), w, 1).value, -1.0 / 12.0, 1e-8);
  const double gap = std::abs(power_iterated_integral(f_q(), 2.0, 0.3) - power_iterated_integral(f_q(), 2.0, 0.6));
  o.require("strip values differ by " + std::to_string(gap), gap > 1e-3);
  return o;
}

Outcome c10() {
  Outcome o;
  // Li_2.5(0.5) over [0 -> 0.2][0.2 -> 0.5] with dz/(1-z) (dz/z)^{1.5}
  const Complex t = 1.5;
  try {
    const auto r = comultiplication_eval(Path::line(0.0, 0.2), Path::line(0.2, 0.5), FormSpec::one_minus(), t, 40);
    o.expect("split N=40", r.rhs, polylog(2.5, 0.5), 1e-6);
  } catch (const Error& e) {
    o.pass = false;
    o.detail = "split N=40: " + std::string(e.name()) + " (remainder of dz/z on [0, 0.2] is unbounded)";
  }
  const auto d = comultiplication_eval(Path::line(0.3, 0.7), Path::arc(0.6, 0.1, 0.0, 2.0 * kPi),
                                       FormSpec::one_minus(), t, 10);
  o.require("degenerate flagged", d.degenerate);
  o.expect("degenerate", d.rhs, d.lhs, 1e-9);
  return o;
}

Outcome c11() {
  Outcome o;
  std::set<int> branches;
  for (auto [s, w] : {std::pair<Complex, Complex>{2.0, 0.5}, {3.0, 0.5}, {2.5, Complex(0.4, 0.2)}}) {
    const auto d = monodromy_defect(scenario(s, w));
    const Complex closed = -2.0 * kPi * kI * rgamma(s) * principal_power(std::log(w), s - 1.0, d.matched_branch);
    o.expect("s=" + std::to_string(s.real()).substr(0, 3), d.defect, closed, 1e-4);
    branches.insert(d.matched_branch);
  }
  o.require("single branch " + std::to_string(*branches.begin()), branches.size() == 1);
  const auto a = looped_polylog(scenario(2.5, Complex(0.4, 0.2), 1e-3));
  const auto b = looped_polylog(scenario(2.5, Complex(0.4, 0.2), 5e-4));
  const double decay = std::abs(a.loop_term_n1) / std::abs(b.loop_term_n1);
  o.require("n=1 decay " + std::to_string(decay).substr(0, 5) + " >= 1.9", decay >= 1.9);
  return o;
}

Outcome c12() {
  Outcome o;
  o.expect("L(2,chi_-4)", dirichlet_L(2.0, chi4()), oracle::catalan, 1e-8);
  o.expect("zeta_Q(i)(2)", dedekind_zeta_transform(-4, 2.0), pi * pi / 6.0 * oracle::catalan, 1e-6);
  return o;
}

Outcome c13() {
  Outcome o;
  // the closed-form built-ins whose G(x) = F(e^{-x}) is meromorphic at 0
  const std::vector<SeriesModel> models = {f_q(),
                                           katz_psi(2),
                                           katz_psi(3),
                                           from_character(chi4()),
                                           from_character(character_from_prime_modulus(5, 4)),
                                           from_character(character_from_prime_modulus(7, 3)),
                                           from_rational(Poly{0, 1, 1}, Poly{1, -2, 1}, "z(1+z)/(1-z)^2")};
  double worst = 0.0;
  for (const auto& m : models) {
    const double k = m.bieberbach_order;
    for (Complex s : {Complex(k + 1.5), Complex(k + 2), Complex(k + 2.5, 1)})
      worst = std::max(worst, std::abs(continue_L(m, s).value - power_iterated_integral(m, s)));
  }
  o.expect("worst of " + std::to_string(3 * models.size()), worst, 0.0, 1e-7);
  return o;
}

Outcome c14() {
  Outcome o;
  std::mt19937_64 rng(14);
  double fe = 0.0, dup = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Complex s = random_point(rng, 10.0);
    fe = std::max(fe, std::abs(gamma(s + 1.0) - s * gamma(s)) / std::abs(gamma(s + 1.0)));
    const Complex lhs = gamma(2.0 * s);
    dup = std::max(dup, std::abs(lhs - std::pow(2.0, 2.0 * s - 1.0) / std::sqrt(pi) * gamma(s) * gamma(s + 0.5)) /
                            std::abs(lhs));
  }
  o.expect("functional eq", fe, 0.0, 1e-11);
  o.expect("duplication", dup, 0.0, 1e-11);

  auto g = [](Complex x) { return 1.0 / citer::expm1(x); };
  const auto ca = circle_coefficients(g, 0.0, -1, 6, 1.0), cb = circle_coefficients(g, 0.0, -1, 6, 0.5);
  double spread = 0.0;
  for (int k = -1; k <= 6; ++k) spread = std::max(spread, std::abs(ca.at(k) - cb.at(k)));
  o.expect("radius independence", spread, 0.0, ca.error_estimate + cb.error_estimate);

  std::mt19937 rng2(7);
  std::uniform_real_distribution<double> re(0.3, 2.9), im(-1.0, 1.0);
  double it = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Complex v{re(rng2), im(rng2)}, u{re(rng2), im(rng2)};
    it = std::max(it, iterativity_check(v, u, 0.2, FormSpec::log()).abs_error);
  }
  o.expect("iterativity x20", it, 0.0, 1e-7);

  const Path p = Path::polyline({Complex(2.0, 0.5), Complex(1.8, -0.3), Complex(2.4, 0.1)});
  bool exact = true;
  for (const FormSpec& f : {FormSpec::log(), FormSpec::one_minus()})
    exact = exact && integrate_form(reverse(p), f) == -integrate_form(p, f);
  o.require("antipode sign exact", exact);

  const std::string first = to_json(run_suite("all"), false).dump();
  const std::string second = to_json(run_suite("all"), false).dump();
  const VerificationReport rep = run_suite("all");
  o.require("verify all deterministic", first == second);
  o.require("verify all passes (" + std::to_string(rep.results.size()) + " checks)", rep.all_passed());
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"zeta(2), zeta(4) from the F_Q iterated integral", c1},
      {"Haar grid k^{-s}, k = 1..8, four s", c2},
      {"Haar property on two triples", c3},
      {"multiplicative iterativity, theta and cubic routes", c4},
      {"depth-2 MZVs against closed forms and double sums", c5},
      {"zeta(-k) = -B_{k+1}/(k+1), k = 0..5", c6},
      {"Katz formula for Psi_2 and Psi_3", c7},
      {"residues at s = 1 and the Q(i) surrogate", c8},
      {"w-independence of the continuation at s = -1", c9},
      {"comultiplication: split path and degenerate case", c10},
      {"polylogarithm monodromy on three scenarios", c11},
      {"Catalan and the Dedekind zeta of Q(i)", c12},
      {"overlap of continuation and direct integral", c13},
      {"property suites and determinism", c14},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const Error& e) {
      o.pass = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string(e.name()) + ": " + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2zu  %s  (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return std::min(failures, 100);
}
