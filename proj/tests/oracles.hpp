#pragma once

// Independent reference values for the test suites: direct Dirichlet sums
// with Euler-Maclaurin tails, Bernoulli recurrences, brute-force sums. None
// of this goes through the iterated-integral machinery it is used to check.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double catalan = 0.91596559417721901505;
inline constexpr double apery = 1.20205690315959428540;  // zeta(3)
inline constexpr double zeta5 = 1.03692775514336992633;

inline double binom(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Bernoulli numbers with B_1 = -1/2, by sum_{k<=n} C(n+1,k) B_k = 0.
inline std::vector<double> bernoulli_numbers(int nmax) {
  std::vector<double> b(static_cast<std::size_t>(nmax + 1), 0.0);
  b[0] = 1.0;
  for (int n = 1; n <= nmax; ++n) {
    double s = 0;
    for (int k = 0; k < n; ++k) s += binom(n + 1, k) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(n)] = -s / (n + 1);
  }
  return b;
}

inline double bernoulli(int n) { return bernoulli_numbers(n)[static_cast<std::size_t>(n)]; }

inline double bernoulli_poly(int n, double x) {
  const auto b = bernoulli_numbers(n);
  double s = 0;
  for (int k = 0; k <= n; ++k) s += binom(n, k) * b[static_cast<std::size_t>(k)] * std::pow(x, n - k);
  return s;
}

/// B_{n,chi} = f^{n-1} sum_a chi(a) B_n(a/f); values[a-1] = chi(a).
inline Complex generalized_bernoulli(int n, const std::vector<Complex>& values) {
  const int f = static_cast<int>(values.size());
  Complex s = 0;
  for (int a = 1; a <= f; ++a)
    s += values[static_cast<std::size_t>(a - 1)] * bernoulli_poly(n, static_cast<double>(a) / f);
  return std::pow(static_cast<double>(f), n - 1) * s;
}

/// Hurwitz zeta sum_{n>=0} (n+q)^{-s}, Re s > 1, by Euler-Maclaurin.
inline Complex hurwitz(Complex s, double q) {
  const int N = 30;
  Complex sum = 0;
  for (int n = 0; n < N; ++n) sum += std::pow(n + q, -s);
  const double a = N + q;
  sum += std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  const auto b = bernoulli_numbers(24);
  Complex rising = s;  // s (s+1) ... (s + 2j - 2)
  double fact = 2.0;   // (2j)!
  for (int j = 1; j <= 12; ++j) {
    sum += b[static_cast<std::size_t>(2 * j)] / fact * rising * std::pow(a, -s - 2.0 * j + 1.0);
    rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    fact *= (2.0 * j + 1) * (2.0 * j + 2);
  }
  return sum;
}

inline Complex zeta(Complex s) { return hurwitz(s, 1.0); }

/// sum_n chi(n) n^{-s} for an f-periodic chi, via Hurwitz sums.
inline Complex dirichlet_L(Complex s, const std::vector<Complex>& values) {
  const int f = static_cast<int>(values.size());
  Complex sum = 0;
  for (int a = 1; a <= f; ++a)
    sum += values[static_cast<std::size_t>(a - 1)] * hurwitz(s, static_cast<double>(a) / f);
  return std::pow(static_cast<double>(f), -s) * sum;
}

/// sum_n w^n n^{-s}, |w| < 1.
inline Complex polylog_series(Complex s, Complex w) {
  Complex sum = 0, p = 1;
  for (int n = 1; n < 100000; ++n) {
    p *= w;
    const Complex t = p * std::pow(static_cast<double>(n), -s);
    sum += t;
    if (std::abs(p) < 1e-18) break;
  }
  return sum;
}

/// sum_{n > m >= 1} n^{-s1} m^{-s2}, truncated at n <= N with the tail
/// approximated by zeta(s2) * sum_{n > N} n^{-s1}.
inline double mzv_double_sum(double s1, double s2, int N = 200000) {
  double inner = 0, total = 0;
  for (int n = 2; n <= N; ++n) {
    inner += std::pow(n - 1.0, -s2);
    total += std::pow(static_cast<double>(n), -s1) * inner;
  }
  const double tail = std::real(hurwitz(s1, N + 1.0));
  return total + inner * tail;
}

/// Brute-force number of ideals of norm n in Z[i]: lattice points a + bi
/// of norm n, modulo the four units.
inline int gaussian_ideals_of_norm(int n) {
  int count = 0;
  const int r = static_cast<int>(std::sqrt(static_cast<double>(n))) + 1;
  for (int a = -r; a <= r; ++a)
    for (int b = -r; b <= r; ++b)
      if (a * a + b * b == n) ++count;
  return count / 4;
}

}  // namespace oracle
