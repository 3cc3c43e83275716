#include <cmath>
#include <numeric>

#include "citer/error.hpp"
#include "citer/series.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace citer;

namespace {

CharacterTable chi4() { return {4, {1.0, 0.0, -1.0, 0.0}, false}; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::InvalidArgument;
}

Complex direct_partial_sum(const SeriesModel& m, Complex z, long n) {
  Complex s = 0, p = 1;
  for (long k = 1; k <= n; ++k) {
    p *= z;
    s += m.coefficient(k) * p;
  }
  return s;
}

}  // namespace

TEST_CASE("from_rational: F_Q") {
  const auto fq = from_rational(std::vector<long>{0, 1}, std::vector<long>{1, -1});
  for (long n : {1L, 2L, 17L, 5000L}) CHECK(fq.coefficient(n) == 1.0);
  CHECK(fq.bieberbach_order == 0.0);
  REQUIRE(fq.laurent_at_1);
  CHECK(fq.laurent_at_1->min_order == -1);
  CHECK(std::abs(fq.laurent_at_1->at(-1) + 1.0) < 1e-15);
  CHECK(std::abs(fq.laurent_at_1->at(0) + 1.0) < 1e-15);
  CHECK(std::abs(fq.laurent_at_1->at(1)) < 1e-15);
  CHECK(std::abs(eval(fq, 0.5) - 1.0) < 1e-15);
  CHECK(eval(fq, 0.0) == 0.0);
}

TEST_CASE("from_rational: polynomial and errors") {
  const auto z = from_rational(std::vector<long>{0, 1}, std::vector<long>{1});
  CHECK(z.coefficient(1) == 1.0);
  for (long n = 2; n < 20; ++n) CHECK(z.coefficient(n) == 0.0);
  CHECK(code_of([] { from_rational(std::vector<long>{0, 1}, std::vector<long>{0, 1}); }) ==
        ErrorCode::InvalidRational);
  CHECK(code_of([] { from_rational(std::vector<long>{1, 1}, std::vector<long>{1, -1}); }) ==
        ErrorCode::InvalidRational);
  // pole at z = 1/2 inside the disc
  CHECK(code_of([] { from_rational(std::vector<long>{0, 1}, std::vector<long>{1, -2}); }) ==
        ErrorCode::InvalidRational);
}

TEST_CASE("from_rational: Bieberbach order from the pole order on the circle") {
  // z / (1 - z)^2 = sum n z^n
  const auto m = from_rational(std::vector<long>{0, 1}, std::vector<long>{1, -2, 1});
  CHECK(m.bieberbach_order == 1.0);
  CHECK(m.coefficient(40) == 40.0);
  // z / (1 + z^2)^2 has double poles at +-i
  const auto n = from_rational(std::vector<long>{0, 1}, std::vector<long>{1, 0, 2, 0, 1});
  CHECK(n.bieberbach_order == 1.0);
  // (z - z^2) / (1 - z)^2 = z / (1 - z): cancellation at 1
  const auto c = from_rational(std::vector<long>{0, 1, -1}, std::vector<long>{1, -2, 1});
  CHECK(c.bieberbach_order == 0.0);
  CHECK(c.rational->order_at_1 == -1);
}

TEST_CASE("from_character: chi mod 4") {
  const auto m = from_character(chi4());
  CHECK(m.coefficient(1) == 1.0);
  CHECK(m.coefficient(2) == 0.0);
  CHECK(m.coefficient(3) == -1.0);
  CHECK(m.coefficient(4) == 0.0);
  CHECK(m.coefficient(5) == 1.0);
  CHECK(std::abs(eval(m, 0.5) - 0.4) < 1e-15);
  REQUIRE(m.laurent_at_1);
  CHECK(m.laurent_at_1->min_order >= 0);
  for (long n = 1; n <= 1000; ++n) CHECK(m.coefficient(n) == m.coefficient(n + 4));
}

TEST_CASE("from_character: chi mod 3 and errors") {
  const auto m = from_character(character_from_prime_modulus(3));
  CHECK(m.coefficient(4) == 1.0);
  CHECK(code_of([] { from_character({4, {1.0, 0.0, 1.0, 0.0}, false}); }) == ErrorCode::TrivialCharacter);
  CHECK(code_of([] { from_character({4, {1.0, 0.0, 0.5, 0.0}, false}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { from_character({4, {1.0, 1.0, -1.0, 0.0}, false}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("character_from_prime_modulus") {
  const auto t3 = character_from_prime_modulus(3);
  CHECK(t3.values == std::vector<Complex>{1.0, -1.0, 0.0});
  const auto t5 = character_from_prime_modulus(5);
  CHECK(t5.values == std::vector<Complex>{1.0, -1.0, -1.0, 1.0, 0.0});
  CHECK(t5.primitive);
  const auto quartic = character_from_prime_modulus(5, 4);
  CHECK(std::abs(quartic.values[1] - kI) < 1e-15);  // 2 is a primitive root mod 5
  CHECK(code_of([] { character_from_prime_modulus(2); }) == ErrorCode::TrivialCharacter);
  CHECK(code_of([] { character_from_prime_modulus(9); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { character_from_prime_modulus(7, 4); }) == ErrorCode::InvalidArgument);
  // complex character: the model still satisfies the character invariants
  const auto cubic = from_character(character_from_prime_modulus(7, 3));
  Complex total = 0;
  for (long a = 1; a <= 7; ++a) total += cubic.coefficient(a);
  CHECK(std::abs(total) < 1e-14);
}

TEST_CASE("character table invariants") {
  for (auto t : {chi4(), character_from_prime_modulus(11, 5), character_from_prime_modulus(13, 2)}) {
    validate_character(t);
    const int f = t.modulus;
    Complex total = 0;
    for (int a = 1; a <= f; ++a) {
      total += t(a);
      CHECK((std::abs(t(a)) == 0.0) == (std::gcd(a, f) > 1));
      for (int b = 1; b <= f; ++b) CHECK(std::abs(t(a * b) - t(a) * t(b)) < 1e-12);
    }
    CHECK(std::abs(total) < 1e-12);
  }
  // chi mod 8 induced from chi mod 4 is not primitive
  CharacterTable induced{8, {1.0, 0.0, -1.0, 0.0, 1.0, 0.0, -1.0, 0.0}, true};
  validate_character(induced);
  CHECK_FALSE(induced.primitive);
}

TEST_CASE("ideal_count_series: Gaussian integers") {
  const auto m = ideal_count_series(-4);
  CHECK(m.coefficient(1) == 1.0);
  CHECK(m.coefficient(2) == 1.0);
  CHECK(m.coefficient(3) == 0.0);
  CHECK(m.coefficient(5) == 2.0);
  for (int n = 1; n <= 200; ++n) CHECK(m.coefficient(n).real() == oracle::gaussian_ideals_of_norm(n));
  CHECK(estimate_bieberbach_order(m, 2000) <= 1.0);
}

TEST_CASE("ideal_count_series: multiplicativity and other fields") {
  for (int d : {-3, -4, -7, -8, -15, -20, -23}) {
    const auto m = ideal_count_series(d);
    CHECK(m.coefficient(1) == 1.0);
    for (long a = 1; a <= 100; ++a)
      for (long b = 1; b <= 100; ++b)
        if (std::gcd(a, b) == 1 && a * b <= 100)
          CHECK(m.coefficient(a * b) == m.coefficient(a) * m.coefficient(b));
  }
  CHECK(reduced_forms(-4).size() == 1);
  CHECK(reduced_forms(-23).size() == 3);
  CHECK(reduced_forms(-20).size() == 2);
  CHECK(code_of([] { ideal_count_series(-12); }) == ErrorCode::UnsupportedField);
  CHECK(code_of([] { ideal_count_series(5); }) == ErrorCode::UnsupportedField);
}

TEST_CASE("ideal_count_series: theta closed form matches partial sums") {
  for (int d : {-3, -4, -23}) {
    const auto m = ideal_count_series(d);
    for (double z : {0.1, 0.5, 0.9}) {
      const Complex direct = direct_partial_sum(m, z, 2000);
      CHECK(std::abs(m.closed_form(z) - direct) < 1e-11 * std::max(1.0, std::abs(direct)));
    }
    const Complex zc{0.3, 0.4};
    CHECK(std::abs(m.closed_form(zc) - direct_partial_sum(m, zc, 400)) < 1e-12);
  }
}

TEST_CASE("katz_psi") {
  const auto k2 = katz_psi(2);
  for (long n = 1; n <= 6; ++n) CHECK(k2.coefficient(n) == (n % 2 ? 1.0 : -1.0));
  CHECK(std::abs(k2.closed_form(1.0) - 0.5) < 1e-15);
  CHECK(katz_psi(3).coefficient(3) == -2.0);
  CHECK(std::abs(iterated_derivative_at_1(k2, 1) - 0.25) < 1e-15);
}

TEST_CASE("moebius and prime indicator") {
  const auto mu = moebius_series();
  CHECK(mu.coefficient(6) == 1.0);
  CHECK(mu.coefficient(4) == 0.0);
  CHECK(mu.coefficient(30) == -1.0);
  CHECK(mu.coefficient(999983) == -1.0);
  const auto pr = prime_indicator_series();
  CHECK(pr.coefficient(4) == 0.0);
  CHECK(pr.coefficient(5) == 1.0);
  CHECK(pr.coefficient(999983) == 1.0);
  const auto small = moebius_series(100);
  CHECK(code_of([&] { small.coefficient(101); }) == ErrorCode::CapExceeded);
  CHECK(code_of([&] { eval(mu, 0.9995); }) == ErrorCode::SlowConvergence);
}

TEST_CASE("eval: closed forms agree with partial sums") {
  const std::vector<SeriesModel> models = {
      from_rational(std::vector<long>{0, 1}, std::vector<long>{1, -1}), from_character(chi4()),
      from_character(character_from_prime_modulus(7, 3)), katz_psi(4),
      from_rational(std::vector<long>{0, 1, 1}, std::vector<long>{1, -3, 3, -1})};
  for (const auto& m : models) {
    for (Complex z : {Complex(0.3), Complex(0.1), Complex(0.5), Complex(0.9), Complex(-0.2, 0.6)}) {
      const Complex direct = direct_partial_sum(m, z, 3000);
      CHECK(std::abs(eval(m, z) - direct) < 1e-10 * std::max(1.0, std::abs(direct)));
    }
  }
  // the partial-sum path itself, with its tail bound
  const auto mu = moebius_series();
  const Complex oracle_value = direct_partial_sum(mu, 0.3, 200);
  QuadratureConfig tight;
  tight.rel_tol = 1e-14;
  CHECK(std::abs(eval(mu, 0.3, tight) - oracle_value) < 1e-14);
}

TEST_CASE("exp form is F(e^{-x})") {
  const auto m = from_character(character_from_prime_modulus(5));
  for (Complex x : {Complex(1e-3), Complex(0.1, 0.2), Complex(2.0), Complex(0.3, -0.3)})
    CHECK(std::abs(m.exp_form(x) - m.closed_form(std::exp(-x))) < 1e-12);
  const auto fq = from_rational(std::vector<long>{0, 1}, std::vector<long>{1, -1});
  // 1/(e^x - 1) near 0 without cancellation
  CHECK(std::abs(fq.exp_form(1e-9) * 1e-9 - 1.0) < 1e-8);
  CHECK(std::abs(fq.exp_form(1e-9) - (1e9 - 0.5)) < 1e-6);
}

TEST_CASE("s_gap_eval") {
  const auto fq = from_rational(std::vector<long>{0, 1}, std::vector<long>{1, -1});
  CHECK(s_gap_eval(fq, 1.0, 0.5) == eval(fq, 0.5));
  double oracle_value = 0;
  for (int n = 1; n < 10; ++n) oracle_value += std::pow(0.5, n * n);
  CHECK(std::abs(s_gap_eval(fq, 2.0, 0.5) - oracle_value) < 1e-14);
  CHECK(std::abs(s_gap_eval(fq, 2.0, 0.5) - 0.56446) < 1e-5);
  const auto chi = from_character(chi4());
  Complex half = 0;
  for (int n = 1; n < 200000; ++n) half += chi.coefficient(n) * std::exp(std::sqrt(n) * std::log(0.9));
  CHECK(std::abs(s_gap_eval(chi, 0.5, 0.9) - half) < 1e-10);
  CHECK(code_of([&] { s_gap_eval(fq, 2.0, 0.9999); }) == ErrorCode::SlowConvergence);
  CHECK(code_of([&] { s_gap_eval(fq, Complex(2.0, 1.0), 0.5); }) == ErrorCode::NoConvergence);
  CHECK(code_of([&] { s_gap_eval(fq, -1.0, 0.5); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("iterated_derivative_at_1") {
  const auto chi = from_character(chi4());
  CHECK(std::abs(iterated_derivative_at_1(chi, 0) - chi.closed_form(1.0)) < 1e-15);
  // generalized Bernoulli oracle: (t d/dt)^m F_chi(1) = -B_{m+1,chi}/(m+1) ... times (-1)^m
  for (int m = 0; m <= 4; ++m) {
    const Complex b = oracle::generalized_bernoulli(m + 1, {1.0, 0.0, -1.0, 0.0});
    const Complex expected = (m % 2 ? -1.0 : 1.0) * (-b / (m + 1.0));
    CHECK(std::abs(iterated_derivative_at_1(chi, m) - expected) < 1e-12);
  }
  const auto fq = from_rational(std::vector<long>{0, 1}, std::vector<long>{1, -1});
  CHECK(code_of([&] { iterated_derivative_at_1(fq, 1); }) == ErrorCode::SingularAt1);
  CHECK(code_of([] { iterated_derivative_at_1(moebius_series(100), 1); }) == ErrorCode::NoClosedForm);
}

TEST_CASE("iterated_derivative_at_1 matches Richardson finite differences") {
  // (t d/dt)^m at t = 1 is (d/dx)^m at x = 0 of F(e^x)
  const auto chi = from_character(character_from_prime_modulus(5));
  auto g = [&](double x) { return chi.closed_form(std::exp(x)); };
  auto diff = [&](double h, int m) -> Complex {
    switch (m) {
      case 1: return (g(h) - g(-h)) / (2 * h);
      case 2: return (g(h) - 2.0 * g(0) + g(-h)) / (h * h);
      default: return (g(2 * h) - 2.0 * g(h) + 2.0 * g(-h) - g(-2 * h)) / (2 * h * h * h);
    }
  };
  const double h = 1e-2;
  for (int m = 1; m <= 3; ++m) {
    const Complex richardson = (4.0 * diff(h / 2, m) - diff(h, m)) / 3.0;
    CHECK(std::abs(iterated_derivative_at_1(chi, m) - richardson) < 1e-6);
  }
}

TEST_CASE("estimate_bieberbach_order") {
  const auto fq = from_rational(std::vector<long>{0, 1}, std::vector<long>{1, -1});
  CHECK(estimate_bieberbach_order(fq, 1000) < 1e-12);
  const auto lin = from_coefficient_rule([](long n) { return Complex(static_cast<double>(n)); }, 1, 1, "n");
  CHECK(std::abs(estimate_bieberbach_order(lin, 1000) - 1.0) < 1e-12);
}

TEST_CASE("declared Bieberbach bounds hold on a sample") {
  const std::vector<SeriesModel> models = {
      from_rational(std::vector<long>{0, 1}, std::vector<long>{1, -2, 1}), from_character(chi4()),
      katz_psi(3), ideal_count_series(-4), moebius_series(20000), prime_indicator_series(20000)};
  for (const auto& m : models) {
    const auto a = m.coefficients(10000);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double n = static_cast<double>(i + 1);
      if (n >= m.bieberbach_start)
        CHECK(std::abs(a[i]) <= m.bieberbach_constant * std::pow(n, m.bieberbach_order) * (1 + 1e-12));
    }
  }
}

TEST_CASE("polynomial helpers") {
  const Poly p{-1.0, 0.0, 0.0, 1.0};  // z^3 - 1
  auto r = poly::roots(p);
  REQUIRE(r.size() == 3);
  for (auto z : r) CHECK(std::abs(poly::eval(p, z)) < 1e-13);
  const Poly q = poly::shift_to_one(p);  // (1+u)^3 - 1 = 3u + 3u^2 + u^3
  CHECK(q == Poly{0.0, 3.0, 3.0, 1.0});
}
