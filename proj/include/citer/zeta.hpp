#pragma once

#include <vector>

#include "citer/numerics.hpp"
#include "citer/series.hpp"

namespace citer {

/// F_Q(z) = z / (1 - z), whose power integral is the Riemann zeta function.
SeriesModel riemann_weight();

/// zeta(s) = \int_{[0,1]} dz/(1-z) (dz/z)^{s-1}, for Re(s) > 1.
Complex zeta(Complex s, const QuadratureConfig& cfg = {});

/// The same value with the roles swapped: (dt/(1-t))^{s-1} dt/t.
Complex zeta_dual(Complex s, const QuadratureConfig& cfg = {});

/// pi^{-s/2} Gamma(s/2) zeta(s) as the iterated integral
/// \int dx/(1-x) (-log x dx / (2 pi x))^{(s-1)/2}.
Complex completed_Z(Complex s, const QuadratureConfig& cfg = {});
/// The product pi^{-s/2} Gamma(s/2) zeta(s), used as the second route.
Complex completed_Z_product(Complex s, const QuadratureConfig& cfg = {});

Complex dirichlet_L(Complex s, const CharacterTable& chi, const QuadratureConfig& cfg = {});
/// L(s, chi) from the gap series sum_a chi(a) sum_n z^{(a + n f)^k} with exponent s/k.
Complex dirichlet_L_gap(Complex s, const CharacterTable& chi, int k, const QuadratureConfig& cfg = {});

/// sum_{n_1 > n_2 > 0} n_1^{-s_1} n_2^{-s_2}; depth 1 or 2.
Complex mzv(const std::vector<Complex>& s, const QuadratureConfig& cfg = {});

/// sum_{n_1 > n_2 >= 0} (n_1 + z)^{-s_1} (n_2 + z)^{-s_2}; the last index
/// starts at 0, so z = 1 gives mzv(s).
Complex hurwitz_mzv(const std::vector<Complex>& s, Complex z, const QuadratureConfig& cfg = {});

/// Li_s(w) along the straight path from 0.
Complex polylog(Complex s, Complex w, const QuadratureConfig& cfg = {});

/// zeta_K(s) for K = Q(sqrt D), D < 0 fundamental, from the ideal-count series.
Complex dedekind_zeta_transform(int discriminant, Complex s, const QuadratureConfig& cfg = {});

}  // namespace citer
