#pragma once

#include "citer/numerics.hpp"
#include "citer/series.hpp"

namespace citer {

/// Hankel contour for G(x) = F(e^{-x}): the upper ray from x_max to delta,
/// the circle |x| = delta counterclockwise, the lower ray back out.
struct ContourSpec {
  /// Circle radius; 0 picks min(0.5, half the distance from 0 to the
  /// nearest other singularity of G).
  double delta = 0.0;
  double x_max = 50.0;
};

enum class ContinuationRoute { Contour, Laurent, Derivative };

struct ContinuationResult {
  Complex value;
  ContinuationRoute route = ContinuationRoute::Contour;
  double error_estimate = 0.0;
};

const char* route_name(ContinuationRoute r);

/// Distance from 0 to the nearest singularity of G other than 0 itself.
double singularity_distance(const SeriesModel& F);

/// The radius actually used for spec on F; throws RadiusError when the
/// circle would enclose another singularity.
double contour_radius(const SeriesModel& F, const ContourSpec& spec);

/// H(s) = \int_C (-x)^s G(x) dx/x with (-x)^s = e^{s log x -+ i pi s} on
/// the upper/lower ray.
Complex contour_H(const SeriesModel& F, Complex s, const ContourSpec& spec = {},
                  const QuadratureConfig& cfg = {});

/// L(F)(s) = Gamma(1-s)/(2 pi i) H(s). At positive integers the value is the
/// limit, taken by Richardson extrapolation when G has no x^{-n} term;
/// otherwise PositiveIntegerPole.
ContinuationResult continue_L(const SeriesModel& F, Complex s, const ContourSpec& spec = {},
                              const QuadratureConfig& cfg = {});

/// L(F)(-k) = (-1)^k k! c_k from the Laurent coefficient c_k of G at 0.
ContinuationResult value_at_negative_integer(const SeriesModel& F, int k, const ContourSpec& spec = {},
                                             const QuadratureConfig& cfg = {});

/// (t d/dt)^k F at t = 1; the same number when F is regular at 1.
ContinuationResult derivative_at_negative_integer(const SeriesModel& F, int k);

/// Res_{x=0} G(x), the residue of L(F)(s) at s = 1.
Complex residue_at_1(const SeriesModel& F, const ContourSpec& spec = {}, const QuadratureConfig& cfg = {});

/// sum_{n=-m}^{-1} (-1)^{1-n} a_n over the Laurent coefficients of F at
/// z = 1, evaluated exactly as printed.
Complex laurent_residue_sum(const SeriesModel& F);

/// Continuation of \int_{[w,1]} F (dt/t)^s to s = -k through the contour
/// truncated at x = -log w.
ContinuationResult w_truncated_continuation(const SeriesModel& F, double w, int k, const ContourSpec& spec = {},
                                            const QuadratureConfig& cfg = {});

/// Growth of |L(F)| on circles of radius 0.1 and 0.05 about s = 1, 8 points each.
struct BoundednessProbe {
  double max_outer = 0.0;
  double max_inner = 0.0;
  bool bounded = false;  // growth ratio below 1.5 (a simple pole gives 2)
};
BoundednessProbe boundedness_probe(const SeriesModel& F, const ContourSpec& spec = {},
                                   const QuadratureConfig& cfg = {});

/// Residue of zeta(s) L(s, chi_D) at s = 1, the surrogate for rho_K of
/// Q(sqrt D), D < 0 fundamental.
Complex dedekind_residue(int discriminant, const ContourSpec& spec = {}, const QuadratureConfig& cfg = {});
/// 2 pi h / (w sqrt|D|).
double class_number_residue(int discriminant);

}  // namespace citer
