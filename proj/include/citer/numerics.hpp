#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace citer {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Quadrature and circle-sampling knobs shared by every module.
struct QuadratureConfig {
  double rel_tol = 1e-10;
  int max_level = 12;
  double tail_cutoff = 50.0;
  double circle_radius = 0.5;
  int circle_points = 256;
  /// Evaluate the sample points of a refinement level with OpenMP. Results
  /// are bit-identical either way; summation order is fixed.
  bool parallel = true;

  /// Throws InvalidArgument if any field is out of range.
  void validate() const;
};

struct QuadResult {
  Complex value;
  double error = 0.0;
  int levels = 0;
  long evaluations = 0;
};

/// Integrand on a finite interval. Receives the abscissa together with its
/// distances to the left and right endpoints, computed without cancellation
/// so that endpoint singularities can be evaluated accurately.
using EndpointIntegrand =
    std::function<Complex(double x, double from_left, double from_right)>;
using Integrand = std::function<Complex(double x)>;
using ComplexFunction = std::function<Complex(Complex)>;

// ---------------------------------------------------------------- scalars

/// Gamma function. Lanczos (g = 7) with reflection for Re(s) < 1/2.
/// Throws PoleError at non-positive integers.
Complex gamma(Complex s);

/// 1/Gamma(s); entire, returns exactly 0 at the poles of Gamma.
Complex rgamma(Complex s);

/// True when s is (within 1e-14) a non-positive integer.
bool is_nonpositive_integer(Complex s);

/// exp(s * (log|z| + i arg z + 2 pi i branch_offset)), arg in (-pi, pi].
Complex principal_power(Complex z, Complex s, int branch_offset = 0);

/// s (s-1) ... (s-n+1) / n!, by the product form.
Complex generalized_binomial(Complex s, int n);

/// log(1 + w) accurate for small |w|.
Complex log1p(Complex w);

/// exp(w) - 1 accurate for small |w|.
Complex expm1(Complex w);

/// Pairwise (cascade) summation; the order is fixed by the input order.
Complex pairwise_sum(const std::vector<Complex>& terms);

// ------------------------------------------------------------- quadrature

/// Tanh-sinh quadrature of f over (a, b). Endpoint singularities that are
/// algebraic or logarithmic are handled without splitting.
QuadResult quad_finite(const Integrand& f, double a, double b,
                       const QuadratureConfig& cfg = {});
QuadResult quad_finite(const EndpointIntegrand& f, double a, double b,
                       const QuadratureConfig& cfg = {});

/// Integral over (0, infinity) for integrands decaying at least like e^{-x}:
/// tanh-sinh on [0, 1] plus tanh-sinh on [1, tail_cutoff], with a decay check
/// at the cutoff (TailTooFat).
QuadResult quad_halfline(const Integrand& f, const QuadratureConfig& cfg = {});
QuadResult quad_halfline(const EndpointIntegrand& f,
                         const QuadratureConfig& cfg = {});

// ------------------------------------------------------------------ Cauchy

struct LaurentCoefficients {
  Complex center;
  int min_order = 0;
  std::vector<Complex> coefficients;  // c_k for k = min_order ... max_order
  double radius_used = 0.0;
  double error_estimate = 0.0;

  int max_order() const {
    return min_order + static_cast<int>(coefficients.size()) - 1;
  }
  /// c_k, or 0 outside the stored range.
  Complex at(int k) const;
};

/// c_k = (1 / 2 pi i) \oint g(x) (x - center)^{-k-1} dx by uniform sampling on
/// |x - center| = radius; the error estimate compares against half the
/// sample count.
LaurentCoefficients circle_coefficients(const ComplexFunction& g, Complex center,
                                        int min_order, int max_order,
                                        double radius,
                                        const QuadratureConfig& cfg = {});

}  // namespace citer
