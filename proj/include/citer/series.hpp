#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "citer/numerics.hpp"

namespace citer {

using Poly = std::vector<Complex>;  // coefficients, lowest degree first

/// Dirichlet character on (Z/fZ); values[a-1] = chi(a).
struct CharacterTable {
  int modulus = 1;
  std::vector<Complex> values;
  bool primitive = false;

  Complex operator()(long n) const;
};

/// Exact data of a rational F = p(z)/q(z), together with its expansion at
/// z = 1 in u = z - 1: F = u^order_at_1 * num_u(u) / den_u(u) with
/// num_u(0) != 0 and den_u(0) != 0.
struct RationalData {
  Poly num_z, den_z;
  Poly num_u, den_u;
  int order_at_1 = 0;
};

/// A power series F(z) = sum_{n>=1} a_n z^n with growth metadata.
struct SeriesModel {
  std::string label;
  std::function<Complex(long)> coefficient;  // a_n for n >= 1

  double bieberbach_order = 0.0;
  double bieberbach_constant = 1.0;  // C_k
  long bieberbach_start = 1;         // N_k

  /// F(z) on the open unit disc; empty when only partial sums are available.
  std::function<Complex(Complex)> closed_form;
  /// G(x) = F(e^{-x}) for Re(x) > 0, evaluated without forming e^{-x} - 1
  /// by subtraction. Always set; slow models fall back on partial sums.
  std::function<Complex(Complex)> exp_form;
  /// G extends meromorphically to a neighbourhood of x = 0.
  bool exp_meromorphic_at_0 = false;

  std::optional<RationalData> rational;
  std::optional<LaurentCoefficients> laurent_at_1;

  /// Largest n the coefficient rule can serve.
  long coefficient_cap = std::numeric_limits<long>::max();

  /// a_1 ... a_{n_max}; faster than repeated coefficient() for recurrences.
  std::vector<Complex> coefficients(long n_max) const;

  // internal: batch rule used by coefficients() when set
  std::function<std::vector<Complex>(long)> batch;
};

// ------------------------------------------------------------ constructors

SeriesModel from_rational(const Poly& numerator, const Poly& denominator,
                          std::string label = "rational");
SeriesModel from_rational(const std::vector<long>& numerator,
                          const std::vector<long>& denominator);

/// Throws TrivialCharacterError for the principal character and
/// InvalidArgument when the table is not a character.
SeriesModel from_character(const CharacterTable& table);

/// The character mod a prime f sending a primitive root to e^{2 pi i / order};
/// order must divide f - 1.
CharacterTable character_from_prime_modulus(int f, int order = 2);

/// Checks the defining properties; throws InvalidArgument or
/// TrivialCharacterError. Fills in `primitive`.
void validate_character(CharacterTable& table);

/// Ideal counts nu(n) of the imaginary quadratic field of discriminant D.
SeriesModel ideal_count_series(int discriminant);

/// Psi(t) = sum_{n<=a} xi_a(n) t^n / (1 - t^a), xi_a = 1 - a on multiples of a.
SeriesModel katz_psi(int a);

SeriesModel moebius_series(long sieve_cap = 1'000'000);
SeriesModel prime_indicator_series(long sieve_cap = 1'000'000);

/// Model from an arbitrary coefficient rule with declared growth.
SeriesModel from_coefficient_rule(std::function<Complex(long)> rule,
                                  double bieberbach_order, double constant,
                                  std::string label);

/// Finite coefficient list a_1 ... a_N (a polynomial) with a declared order.
SeriesModel from_coefficient_list(const std::vector<Complex>& values,
                                  double bieberbach_order);

// -------------------------------------------------------------- operations

Complex eval(const SeriesModel& model, Complex z,
             const QuadratureConfig& cfg = {});

/// sum a_n exp(n^s log z) for real z in (0, 1) and Re(s) > 0.
Complex s_gap_eval(const SeriesModel& model, Complex s, double z,
                   const QuadratureConfig& cfg = {});

/// (t d/dt)^m F at t = 1, applied symbolically to the rational closed form.
Complex iterated_derivative_at_1(const SeriesModel& model, int m);

/// Least-squares slope of log|a_n| against log n, clamped at 0.
double estimate_bieberbach_order(const SeriesModel& model, long sample_max);

// ------------------------------------------------------ quadratic fields

struct BinaryForm {
  long a, b, c;
};

/// Reduced positive definite forms of discriminant D (one per class).
std::vector<BinaryForm> reduced_forms(int discriminant);
bool is_fundamental_discriminant(int discriminant);
/// Kronecker symbol (D / n).
int kronecker(int discriminant, long n);
/// Number of units of the ring of integers.
int unit_count(int discriminant);

// -------------------------------------------------------------- polynomial

namespace poly {
Complex eval(const Poly& p, Complex z);
Poly derivative(const Poly& p);
Poly multiply(const Poly& a, const Poly& b);
Poly shift_to_one(const Poly& p);  // p(1 + u) as a polynomial in u
void trim(Poly& p);
/// All complex roots (Aberth iteration).
std::vector<Complex> roots(const Poly& p);
}  // namespace poly

}  // namespace citer
