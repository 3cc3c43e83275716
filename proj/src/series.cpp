#include "citer/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "citer/error.hpp"

namespace citer {

namespace {

constexpr long kTableSize = 4096;
constexpr double kCircleTol = 1e-6;
constexpr double kClusterTol = 1e-4;

}  // namespace

// ---------------------------------------------------------------- polynomial

namespace poly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0.0) p.pop_back();
}

Complex eval(const Poly& p, Complex z) {
  Complex acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = static_cast<double>(i) * p[i];
  return d;
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly shift_to_one(const Poly& p) {
  // repeated synthetic division by (z - 1); exact for integer coefficients
  Poly q = p;
  const std::size_t n = q.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) q[j - 1] += q[j];
  return q;
}

std::vector<Complex> roots(const Poly& input) {
  Poly p = input;
  trim(p);
  std::vector<Complex> out;
  // zero roots
  std::size_t lead = 0;
  while (lead < p.size() && p[lead] == 0.0) ++lead;
  out.assign(lead, 0.0);
  p.erase(p.begin(), p.begin() + static_cast<long>(lead));
  const int n = static_cast<int>(p.size()) - 1;
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back(-p[0] / p[1]);
    return out;
  }
  const Poly dp = derivative(p);
  const double r0 = std::pow(std::abs(p[0] / p[static_cast<std::size_t>(n)]), 1.0 / n);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] = std::polar(r0, 2.0 * kPi * k / n + 0.4);
  for (int iter = 0; iter < 800; ++iter) {
    double worst = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      const Complex pv = eval(p, z[k]);
      if (pv == 0.0) continue;
      const Complex w = pv / eval(dp, z[k]);
      Complex sum = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      const Complex step = w / (1.0 - w * sum);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (worst < 1e-15) break;
  }
  out.insert(out.end(), z.begin(), z.end());
  return out;
}

}  // namespace poly

// ----------------------------------------------------------------- helpers

namespace {

long gcd_long(long a, long b) { return std::gcd(a, b); }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_squarefree(long n) {
  for (long d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

long pow_mod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

void require_index(long n, long cap) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "coefficient index must be >= 1");
  if (n > cap)
    fail(ErrorCode::CapExceeded, "coefficient a_" + std::to_string(n) +
                                     " lies beyond the sieve cap " + std::to_string(cap));
}

/// Strips the lowest-degree coefficients that vanish (relative to the
/// largest coefficient); returns how many were removed.
int strip_low(Poly& p) {
  double scale = 0;
  for (const auto& c : p) scale = std::max(scale, std::abs(c));
  int removed = 0;
  while (!p.empty() && std::abs(p.front()) <= 1e-12 * scale) {
    p.erase(p.begin());
    ++removed;
  }
  return removed;
}

Complex rational_value(const RationalData& rd, Complex z) {
  const Complex u = z - 1.0;
  if (std::abs(u) < 0.25) {
    const Complex d = poly::eval(rd.den_u, u);
    if (rd.order_at_1 < 0 && u == 0.0) fail(ErrorCode::Pole, "pole at z = 1");
    return std::pow(u, rd.order_at_1) * poly::eval(rd.num_u, u) / d;
  }
  const Complex q = poly::eval(rd.den_z, z);
  if (q == 0.0) fail(ErrorCode::Pole, "denominator vanishes");
  return poly::eval(rd.num_z, z) / q;
}

/// Same as rational_value at z = e^{-x}, with u = expm1(-x) formed directly.
Complex rational_exp_value(const RationalData& rd, Complex x) {
  const Complex u = citer::expm1(-x);
  if (std::abs(u) < 0.25) {
    if (u == 0.0 && rd.order_at_1 < 0) fail(ErrorCode::Pole, "pole at x = 0");
    return std::pow(u, rd.order_at_1) * poly::eval(rd.num_u, u) / poly::eval(rd.den_u, u);
  }
  const Complex z = std::exp(-x);  // 1 + u would lose e^{-x} below rounding
  const Complex q = poly::eval(rd.den_z, z);
  if (q == 0.0) fail(ErrorCode::Pole, "denominator vanishes");
  return poly::eval(rd.num_z, z) / q;
}

std::vector<Complex> recurrence_coefficients(const Poly& p, const Poly& q, long n_max) {
  std::vector<Complex> a(static_cast<std::size_t>(n_max + 1), 0.0);
  const Complex q0 = q[0];
  for (long n = 1; n <= n_max; ++n) {
    Complex acc = static_cast<std::size_t>(n) < p.size() ? p[static_cast<std::size_t>(n)] : 0.0;
    const long top = std::min<long>(n, static_cast<long>(q.size()) - 1);
    for (long j = 1; j <= top; ++j)
      acc -= q[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(n - j)];
    a[static_cast<std::size_t>(n)] = acc / q0;
  }
  a.erase(a.begin());
  return a;
}

int cluster_count(const std::vector<Complex>& roots, Complex r) {
  int m = 0;
  for (const auto& x : roots)
    if (std::abs(x - r) < kClusterTol) ++m;
  return m;
}

/// Highest pole order of p/q on the closed unit disc, excluding z = 1. Throws
/// InvalidRational for a pole strictly inside the disc.
int max_pole_order_on_circle(const Poly& p, const Poly& q) {
  const auto qr = poly::roots(q);
  if (qr.empty()) return 0;
  const auto pr = poly::roots(p);
  int best = 0;
  for (const auto& r : qr) {
    if (std::abs(r - 1.0) < kClusterTol) continue;
    const int order = cluster_count(qr, r) - cluster_count(pr, r);
    if (order <= 0) continue;
    if (std::abs(r) < 1.0 - kCircleTol)
      fail(ErrorCode::InvalidRational, "pole inside the unit disc; F is not holomorphic there");
    if (std::abs(std::abs(r) - 1.0) <= kCircleTol) best = std::max(best, order);
  }
  return best;
}

double growth_constant(const std::vector<Complex>& a, double k) {
  double c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c = std::max(c, std::abs(a[i]) / std::pow(static_cast<double>(i + 1), k));
  return c > 0 ? c : 1.0;
}

/// Partial sums with the tail bound C sum_{n>N} n^k |z|^n.
Complex partial_sum(const SeriesModel& m, Complex z, const QuadratureConfig& cfg) {
  const double r = std::abs(z);
  if (r >= 1.0) fail(ErrorCode::InvalidArgument, "partial sums need |z| < 1");
  if (r > 0.999)
    fail(ErrorCode::SlowConvergence, "|z| > 0.999 and " + m.label + " has no closed form");
  if (r == 0.0) return 0.0;
  const double k = m.bieberbach_order, c = m.bieberbach_constant;
  Complex sum = 0, power = 1;
  for (long n = 1;; ++n) {
    power *= z;
    sum += m.coefficient(n) * power;
    const double q = std::pow((n + 2.0) / (n + 1.0), k) * r;
    if (q < 1.0 && n >= m.bieberbach_start) {
      const double tail = c * std::pow(n + 1.0, k) * std::pow(r, n + 1.0) / (1.0 - q);
      if (tail <= cfg.rel_tol * std::max(std::abs(sum), 1e-30)) break;
    }
  }
  return sum;
}

void attach_partial_sum_exp_form(SeriesModel& m) {
  auto self = std::make_shared<SeriesModel>(m);
  m.exp_form = [self](Complex x) {
    if (x.real() <= 0) fail(ErrorCode::InvalidArgument, "exp form needs Re(x) > 0");
    return partial_sum(*self, std::exp(-x), QuadratureConfig{});
  };
}

LaurentCoefficients laurent_from_rational(const RationalData& rd, int terms) {
  LaurentCoefficients lc;
  lc.center = 1.0;
  lc.min_order = rd.order_at_1;
  lc.coefficients.assign(static_cast<std::size_t>(terms), 0.0);
  for (int j = 0; j < terms; ++j) {
    Complex acc = static_cast<std::size_t>(j) < rd.num_u.size() ? rd.num_u[static_cast<std::size_t>(j)] : 0.0;
    for (int i = 1; i <= j && static_cast<std::size_t>(i) < rd.den_u.size(); ++i)
      acc -= rd.den_u[static_cast<std::size_t>(i)] * lc.coefficients[static_cast<std::size_t>(j - i)];
    lc.coefficients[static_cast<std::size_t>(j)] = acc / rd.den_u[0];
  }
  return lc;
}

/// Shared construction for every rational model. When `declared_order` is
/// negative the Bieberbach order is derived from the poles on |z| = 1.
SeriesModel build_rational(Poly p, Poly q, std::string label, double declared_order) {
  poly::trim(p);
  poly::trim(q);
  if (q.empty() || q[0] == 0.0)
    fail(ErrorCode::InvalidRational, "denominator must have a nonzero constant term");
  if (!p.empty() && p[0] != 0.0)
    fail(ErrorCode::InvalidRational, "a_0 must vanish (numerator constant term is nonzero)");

  RationalData rd;
  rd.num_z = p;
  rd.den_z = q;
  rd.num_u = poly::shift_to_one(p);
  rd.den_u = poly::shift_to_one(q);
  const int zeros = strip_low(rd.num_u);
  const int poles = strip_low(rd.den_u);
  if (rd.num_u.empty()) {
    // F vanishes identically
    rd.num_u = {0.0};
    rd.order_at_1 = 0;
  } else {
    rd.order_at_1 = zeros - poles;
  }

  SeriesModel m;
  m.label = std::move(label);
  if (declared_order >= 0) {
    m.bieberbach_order = declared_order;
  } else {
    const int pole_order = std::max(-rd.order_at_1, max_pole_order_on_circle(p, q));
    m.bieberbach_order = std::max(0, pole_order - 1);
  }

  auto table = std::make_shared<const std::vector<Complex>>(recurrence_coefficients(p, q, kTableSize));
  m.bieberbach_constant = growth_constant(*table, m.bieberbach_order);
  m.batch = [p, q](long n_max) { return recurrence_coefficients(p, q, n_max); };
  m.coefficient = [table, p, q](long n) {
    require_index(n, std::numeric_limits<long>::max());
    if (n <= kTableSize) return (*table)[static_cast<std::size_t>(n - 1)];
    return recurrence_coefficients(p, q, n).back();
  };

  auto shared = std::make_shared<const RationalData>(rd);
  m.closed_form = [shared](Complex z) { return rational_value(*shared, z); };
  m.exp_form = [shared](Complex x) { return rational_exp_value(*shared, x); };
  m.exp_meromorphic_at_0 = true;
  m.laurent_at_1 = laurent_from_rational(rd, 12);
  m.rational = std::move(rd);
  return m;
}

}  // namespace

// ------------------------------------------------------------- SeriesModel

std::vector<Complex> SeriesModel::coefficients(long n_max) const {
  if (n_max < 0) fail(ErrorCode::InvalidArgument, "n_max must be non-negative");
  if (batch) return batch(n_max);
  std::vector<Complex> a;
  a.reserve(static_cast<std::size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) a.push_back(coefficient(n));
  return a;
}

Complex CharacterTable::operator()(long n) const {
  long r = n % modulus;
  if (r < 0) r += modulus;
  if (r == 0) r = modulus;
  return values[static_cast<std::size_t>(r - 1)];
}

// ------------------------------------------------------------ constructors

SeriesModel from_rational(const Poly& numerator, const Poly& denominator, std::string label) {
  return build_rational(numerator, denominator, std::move(label), -1.0);
}

SeriesModel from_rational(const std::vector<long>& numerator, const std::vector<long>& denominator) {
  Poly p(numerator.begin(), numerator.end());
  Poly q(denominator.begin(), denominator.end());
  return from_rational(p, q);
}

void validate_character(CharacterTable& t) {
  const int f = t.modulus;
  if (f < 1 || static_cast<int>(t.values.size()) != f)
    fail(ErrorCode::InvalidArgument, "character table needs exactly `modulus` values");
  for (int a = 1; a <= f; ++a) {
    Complex& v = t.values[static_cast<std::size_t>(a - 1)];
    if (gcd_long(a, f) > 1) {
      if (std::abs(v) > 1e-12)
        fail(ErrorCode::InvalidArgument, "chi(" + std::to_string(a) + ") must vanish (not coprime to modulus)");
      v = 0.0;
    } else if (std::abs(std::abs(v) - 1.0) > 1e-9) {
      fail(ErrorCode::InvalidArgument, "chi(" + std::to_string(a) + ") is not a root of unity");
    }
  }
  if (std::abs(t(1) - 1.0) > 1e-9) fail(ErrorCode::InvalidArgument, "chi(1) must be 1");
  for (int a = 1; a <= f; ++a)
    for (int b = a; b <= f; ++b)
      if (std::abs(t(static_cast<long>(a) * b) - t(a) * t(b)) > 1e-9)
        fail(ErrorCode::InvalidArgument, "table is not multiplicative");
  bool trivial = true;
  for (int a = 1; a <= f; ++a)
    if (gcd_long(a, f) == 1 && std::abs(t(a) - 1.0) > 1e-9) trivial = false;
  if (trivial) fail(ErrorCode::TrivialCharacter, "the principal character has a pole at z = 1");

  // primitive unless induced from a proper divisor d of f
  t.primitive = true;
  for (int d = 1; d < f && t.primitive; ++d) {
    if (f % d != 0) continue;
    bool induced = true;
    for (int a = 1; a <= f && induced; ++a)
      if (gcd_long(a, f) == 1 && a % d == 1 % d && std::abs(t(a) - 1.0) > 1e-9) induced = false;
    if (induced) t.primitive = false;
  }
}

SeriesModel from_character(const CharacterTable& input) {
  CharacterTable t = input;
  validate_character(t);
  const int f = t.modulus;
  Poly p(static_cast<std::size_t>(f + 1), 0.0), q(static_cast<std::size_t>(f + 1), 0.0);
  for (int a = 1; a <= f; ++a) p[static_cast<std::size_t>(a)] = t(a);
  q[0] = 1.0;
  q[static_cast<std::size_t>(f)] = -1.0;
  SeriesModel m = build_rational(p, q, "character mod " + std::to_string(f), 0.0);
  m.coefficient = [t](long n) {
    require_index(n, std::numeric_limits<long>::max());
    return t(n);
  };
  m.batch = nullptr;
  m.bieberbach_constant = 1.0;
  return m;
}

CharacterTable character_from_prime_modulus(int f, int order) {
  if (!is_prime(f)) fail(ErrorCode::NotPrime, std::to_string(f) + " is not prime");
  if (f == 2) fail(ErrorCode::TrivialCharacter, "there is no non-trivial character mod 2");
  if (order < 2 || (f - 1) % order != 0)
    fail(ErrorCode::InvalidArgument, "order must be >= 2 and divide f - 1");
  const auto primes = factorize(f - 1);
  long g = 2;
  for (;; ++g) {
    bool primitive_root = true;
    for (const auto& [q, e] : primes)
      if (pow_mod(g, (f - 1) / q, f) == 1) primitive_root = false;
    if (primitive_root) break;
  }
  auto root = [order](long j) -> Complex {
    j %= order;
    if ((4 * j) % order == 0) {
      static const Complex quarter[] = {1.0, kI, -1.0, -kI};
      return quarter[(4 * j / order) % 4];
    }
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(j) / order);
  };
  CharacterTable t;
  t.modulus = f;
  t.values.assign(static_cast<std::size_t>(f), 0.0);
  long x = 1;
  for (long j = 0; j < f - 1; ++j) {
    t.values[static_cast<std::size_t>(x - 1)] = root(j);
    x = x * g % f;
  }
  validate_character(t);
  return t;
}

bool is_fundamental_discriminant(int d) {
  if (d >= 0) return false;
  const long n = -static_cast<long>(d);
  const long r = ((d % 4) + 4) % 4;
  if (r == 1) return is_squarefree(n);
  if (r == 0) {
    const long m = d / 4;
    const long rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && is_squarefree(-m);
  }
  return false;
}

int kronecker(int d, long n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "kronecker symbol needs n >= 1");
  int result = 1;
  for (const auto& [p, e] : factorize(n)) {
    int chi;
    if (p == 2) {
      const long r = ((d % 8) + 8) % 8;
      chi = (d % 2 == 0) ? 0 : (r == 1 || r == 7) ? 1 : -1;
    } else {
      const long r = ((d % p) + p) % p;
      chi = r == 0 ? 0 : (pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1);
    }
    for (int i = 0; i < e; ++i) result *= chi;
  }
  return result;
}

int unit_count(int d) { return d == -4 ? 4 : d == -3 ? 6 : 2; }

std::vector<BinaryForm> reduced_forms(int d) {
  std::vector<BinaryForm> forms;
  const long D = d;
  for (long a = 1; 3 * a * a <= -D; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      if ((b * b - D) % (4 * a) != 0) continue;
      const long c = (b * b - D) / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      forms.push_back({a, b, c});
    }
  }
  return forms;
}

namespace {

struct ThetaForm {
  double a, b, c;
  double lambda_min, lambda_max;
};

/// G(x) = (1/w) sum_Q (Theta_Q(x) - 1), switching to the Poisson-dual sum
/// whenever it decays faster.
Complex theta_exp_form(const std::vector<ThetaForm>& forms, double abs_d, int w, Complex x) {
  if (x.real() <= 0) fail(ErrorCode::InvalidArgument, "exp form needs Re(x) > 0");
  const double direct_rate = x.real();
  const double dual_rate = kPi * kPi * (1.0 / x).real();
  Complex total = 0;
  for (const auto& f : forms) {
    const bool dual = dual_rate / f.lambda_max > direct_rate * f.lambda_min;
    const double rate = dual ? dual_rate / f.lambda_max : direct_rate * f.lambda_min;
    const long m_max = static_cast<long>(std::ceil(std::sqrt(42.0 / rate))) + 1;
    if (m_max > 4000) fail(ErrorCode::SlowConvergence, "theta series too close to the unit circle");
    const Complex t = dual ? kPi * kPi / x : x;
    Complex sum = 0;
    for (long m = -m_max; m <= m_max; ++m) {
      for (long n = -m_max; n <= m_max; ++n) {
        const double md = static_cast<double>(m), nd = static_cast<double>(n);
        const double quad = dual ? 4.0 * (f.c * md * md - f.b * md * nd + f.a * nd * nd) / abs_d
                                 : f.a * md * md + f.b * md * nd + f.c * nd * nd;
        sum += std::exp(-t * quad);
      }
    }
    const Complex theta = dual ? (kPi / x) / std::sqrt(abs_d / 4.0) * sum : sum;
    total += theta - 1.0;
  }
  return total / static_cast<double>(w);
}

}  // namespace

SeriesModel ideal_count_series(int d) {
  if (!is_fundamental_discriminant(d))
    fail(ErrorCode::UnsupportedField, std::to_string(d) + " is not a negative fundamental discriminant");
  SeriesModel m;
  m.label = "ideal counts D=" + std::to_string(d);
  m.coefficient = [d](long n) -> Complex {
    require_index(n, std::numeric_limits<long>::max());
    long nu = 1;
    for (const auto& [p, e] : factorize(n)) {
      const int chi = kronecker(d, p);
      long s = 0, pw = 1;
      for (int j = 0; j <= e; ++j) {
        s += pw;
        pw *= chi;
      }
      nu *= s;
    }
    return static_cast<double>(nu);
  };
  m.bieberbach_order = 1.0;  // nu(n) <= d(n) <= n
  m.bieberbach_constant = 1.0;

  std::vector<ThetaForm> forms;
  for (const auto& q : reduced_forms(d)) {
    const double a = static_cast<double>(q.a), b = static_cast<double>(q.b), c = static_cast<double>(q.c);
    const double mid = 0.5 * (a + c), rad = std::hypot(0.5 * (a - c), 0.5 * b);
    forms.push_back({a, b, c, mid - rad, mid + rad});
  }
  const double abs_d = -static_cast<double>(d);
  const int w = unit_count(d);
  m.exp_form = [forms, abs_d, w](Complex x) { return theta_exp_form(forms, abs_d, w, x); };
  m.closed_form = [forms, abs_d, w](Complex z) -> Complex {
    if (z == 0.0) return 0.0;
    if (std::abs(z) >= 1.0) fail(ErrorCode::InvalidArgument, "ideal-count series needs |z| < 1");
    return theta_exp_form(forms, abs_d, w, -std::log(z));
  };
  m.exp_meromorphic_at_0 = false;
  return m;
}

SeriesModel katz_psi(int a) {
  if (a < 2) fail(ErrorCode::InvalidArgument, "katz_psi needs a >= 2");
  Poly p(static_cast<std::size_t>(a + 1), 1.0), q(static_cast<std::size_t>(a + 1), 0.0);
  p[0] = 0.0;
  p[static_cast<std::size_t>(a)] = 1.0 - a;
  q[0] = 1.0;
  q[static_cast<std::size_t>(a)] = -1.0;
  SeriesModel m = build_rational(p, q, "katz psi a=" + std::to_string(a), 0.0);
  m.coefficient = [a](long n) -> Complex {
    require_index(n, std::numeric_limits<long>::max());
    return n % a == 0 ? 1.0 - a : 1.0;
  };
  m.batch = nullptr;
  m.bieberbach_constant = a - 1.0;
  return m;
}

namespace {

SeriesModel sieve_model(std::shared_ptr<const std::vector<signed char>> table, long cap, std::string label) {
  SeriesModel m;
  m.label = std::move(label);
  m.coefficient = [table, cap](long n) -> Complex {
    require_index(n, cap);
    return static_cast<double>((*table)[static_cast<std::size_t>(n)]);
  };
  m.bieberbach_order = 0.0;
  m.bieberbach_constant = 1.0;
  m.coefficient_cap = cap;
  attach_partial_sum_exp_form(m);
  return m;
}

}  // namespace

SeriesModel moebius_series(long cap) {
  if (cap < 1) fail(ErrorCode::InvalidArgument, "sieve cap must be positive");
  std::vector<signed char> mu(static_cast<std::size_t>(cap + 1), 1);
  std::vector<bool> composite(static_cast<std::size_t>(cap + 1), false);
  mu[0] = 0;
  for (long p = 2; p <= cap; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    for (long k = p; k <= cap; k += p) {
      if (k > p) composite[static_cast<std::size_t>(k)] = true;
      mu[static_cast<std::size_t>(k)] = static_cast<signed char>(-mu[static_cast<std::size_t>(k)]);
    }
    if (p <= cap / p)
      for (long k = p * p; k <= cap; k += p * p) mu[static_cast<std::size_t>(k)] = 0;
  }
  return sieve_model(std::make_shared<const std::vector<signed char>>(std::move(mu)), cap, "moebius");
}

SeriesModel prime_indicator_series(long cap) {
  if (cap < 1) fail(ErrorCode::InvalidArgument, "sieve cap must be positive");
  std::vector<signed char> prime(static_cast<std::size_t>(cap + 1), 1);
  prime[0] = 0;
  prime[1] = 0;
  for (long p = 2; p <= cap / p; ++p)
    if (prime[static_cast<std::size_t>(p)])
      for (long k = p * p; k <= cap; k += p) prime[static_cast<std::size_t>(k)] = 0;
  return sieve_model(std::make_shared<const std::vector<signed char>>(std::move(prime)), cap, "primes");
}

SeriesModel from_coefficient_rule(std::function<Complex(long)> rule, double k, double constant,
                                  std::string label) {
  if (k < 0 || constant <= 0) fail(ErrorCode::InvalidArgument, "growth metadata must be positive");
  SeriesModel m;
  m.label = std::move(label);
  m.coefficient = [rule = std::move(rule)](long n) {
    require_index(n, std::numeric_limits<long>::max());
    return rule(n);
  };
  m.bieberbach_order = k;
  m.bieberbach_constant = constant;
  attach_partial_sum_exp_form(m);
  return m;
}

SeriesModel from_coefficient_list(const std::vector<Complex>& values, double k) {
  if (values.empty()) fail(ErrorCode::InvalidArgument, "coefficient list is empty");
  if (k < 0) fail(ErrorCode::InvalidArgument, "bieberbach order must be >= 0");
  Poly p(values.size() + 1, 0.0);
  std::copy(values.begin(), values.end(), p.begin() + 1);
  SeriesModel m = build_rational(p, {1.0}, "coefficients", k);
  const auto shared = std::make_shared<const std::vector<Complex>>(values);
  m.coefficient = [shared](long n) -> Complex {
    require_index(n, std::numeric_limits<long>::max());
    return static_cast<std::size_t>(n) <= shared->size() ? (*shared)[static_cast<std::size_t>(n - 1)] : 0.0;
  };
  m.batch = nullptr;
  return m;
}

// -------------------------------------------------------------- operations

Complex eval(const SeriesModel& model, Complex z, const QuadratureConfig& cfg) {
  cfg.validate();
  if (model.closed_form) return model.closed_form(z);
  return partial_sum(model, z, cfg);
}

Complex s_gap_eval(const SeriesModel& model, Complex s, double z, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(z > 0.0 && z < 1.0)) fail(ErrorCode::InvalidArgument, "s-gap transform needs real z in (0, 1)");
  if (s.real() <= 0) fail(ErrorCode::InvalidArgument, "s-gap transform needs Re(s) > 0");
  // For Im(s) != 0 the exponents n^s rotate into the left half plane and the
  // terms grow without bound.
  if (std::abs(s.imag()) > 1e-14 * std::abs(s))
    fail(ErrorCode::NoConvergence, "s-gap series diverges for non-real s");
  if (s == 1.0) return eval(model, z, cfg);
  if (z > 0.999) fail(ErrorCode::SlowConvergence, "s-gap transform too close to z = 1");

  const double sigma = s.real(), k = model.bieberbach_order, c = model.bieberbach_constant;
  const double lambda = -std::log(z);
  const double a = (k + 1.0) / sigma;
  Complex sum = 0;
  for (long n = 1; n <= 5'000'000; ++n) {
    const double y = lambda * std::pow(static_cast<double>(n), sigma);
    sum += model.coefficient(n) * std::exp(-y);
    if (n < model.bieberbach_start || sigma * y <= k) continue;  // bound not yet decreasing
    // sum_{m>n} C m^k e^{-lambda m^sigma} <= C Gamma(a, y) / (sigma lambda^a)
    double upper = std::pow(y, a - 1.0) * std::exp(-y);
    if (a > 1.0) {
      if (y <= 2.0 * (a - 1.0)) continue;
      upper /= 1.0 - (a - 1.0) / y;
    }
    const double tail = c * upper / (sigma * std::pow(lambda, a));
    if (tail <= cfg.rel_tol * std::max(std::abs(sum), 1e-30)) return sum;
  }
  fail(ErrorCode::SlowConvergence, "s-gap transform needs more than 5e6 terms");
}

Complex iterated_derivative_at_1(const SeriesModel& model, int m) {
  if (m < 0) fail(ErrorCode::InvalidArgument, "derivative order must be >= 0");
  if (!model.rational) fail(ErrorCode::NoClosedForm, model.label + " has no rational closed form");
  const RationalData& rd = *model.rational;
  if (rd.order_at_1 < 0) fail(ErrorCode::SingularAt1, model.label + " has a pole at t = 1");
  // F = P_0 / D in u = t - 1; t d/dt = (1 + u) d/du and
  // theta^j F = P_j / D^{j+1} with P_{j+1} = (1 + u)(P_j' D - (j+1) P_j D').
  Poly p(static_cast<std::size_t>(rd.order_at_1), 0.0);
  p.insert(p.end(), rd.num_u.begin(), rd.num_u.end());
  const Poly& d = rd.den_u;
  const Poly dd = poly::derivative(d);
  const Poly one_plus_u{1.0, 1.0};
  for (int j = 0; j < m; ++j) {
    Poly a = poly::multiply(poly::derivative(p), d);
    Poly b = poly::multiply(p, dd);
    a.resize(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= (j + 1.0) * b[i];
    p = poly::multiply(one_plus_u, a);
  }
  const Complex p0 = p.empty() ? 0.0 : p[0];
  return p0 / std::pow(d[0], m + 1);
}

double estimate_bieberbach_order(const SeriesModel& model, long sample_max) {
  if (sample_max < 2) fail(ErrorCode::InvalidArgument, "need at least two samples");
  const auto a = model.coefficients(std::min(sample_max, model.coefficient_cap));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double mag = std::abs(a[i]);
    if (!(mag > 1e-300)) continue;
    const double x = std::log(static_cast<double>(i + 1)), y = std::log(mag);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return 0.0;
  const double denom = count * sxx - sx * sx;
  if (denom <= 0) return 0.0;
  return std::max(0.0, (count * sxy - sx * sy) / denom);
}

}  // namespace citer
