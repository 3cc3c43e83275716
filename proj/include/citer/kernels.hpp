#pragma once

// Data-parallel sampling kernels behind the quadrature engines. Each kernel
// fills a vector of weighted samples; reduction is done separately by
// pairwise_sum so the OpenMP and serial variants give bit-identical results.

#include <vector>

#include "citer/numerics.hpp"

namespace citer::kernels {

/// One tanh-sinh node mapped onto an interval.
struct Node {
  double x;           // abscissa
  double from_left;   // x - a, without cancellation
  double from_right;  // b - x, without cancellation
  double weight;      // includes the Jacobian, excludes the step h
};

/// Largest |t| used on the tanh-sinh ladder.
inline constexpr double kMaxT = 6.0;

/// Nodes added at refinement level `level` (level 0 has step 1; level L has
/// step 2^-L and only the odd multiples are new).
std::vector<Node> tanh_sinh_nodes(double a, double b, int level);

/// Weighted samples weight_i * f(node_i), evaluated in index order.
std::vector<Complex> sample_serial(const EndpointIntegrand& f,
                                   const std::vector<Node>& nodes);

/// Same contract as sample_serial, evaluated with an OpenMP parallel loop.
/// Exceptions thrown by f are rethrown on the calling thread.
std::vector<Complex> sample_parallel(const EndpointIntegrand& f,
                                     const std::vector<Node>& nodes);

/// g(center + radius * e^{2 pi i j / n}) for j = 0 .. n-1.
std::vector<Complex> circle_samples_serial(const ComplexFunction& g,
                                           Complex center, double radius,
                                           int n);
std::vector<Complex> circle_samples_parallel(const ComplexFunction& g,
                                             Complex center, double radius,
                                             int n);

/// Whether the library was compiled with OpenMP.
bool openmp_enabled() noexcept;

}  // namespace citer::kernels
