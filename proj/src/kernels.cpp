#include "citer/kernels.hpp"

#include <cmath>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace citer::kernels {

namespace {

// Below this many samples the thread start-up costs more than it saves.
constexpr long kParallelThreshold = 64;

Node make_node(double a, double b, double t) {
  const double half = 0.5 * (b - a);
  const double u = 0.5 * kPi * std::sinh(t);
  const double e = std::exp(-2.0 * std::fabs(u));  // in (0, 1]
  // 1 - tanh|u| = 2e / (1 + e), computed without cancellation.
  const double small = half * 2.0 * e / (1.0 + e);
  const double large = 2.0 * half - small;
  Node n{};
  if (u >= 0) {
    n.from_left = large;
    n.from_right = small;
    n.x = b - small;
  } else {
    n.from_left = small;
    n.from_right = large;
    n.x = a + small;
  }
  // sech^2(u) = 4e / (1 + e)^2
  n.weight = half * 0.5 * kPi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
  return n;
}

}  // namespace

std::vector<Node> tanh_sinh_nodes(double a, double b, int level) {
  std::vector<Node> nodes;
  const double h = std::ldexp(1.0, -level);
  const long kmax = static_cast<long>(std::floor(kMaxT / h));
  for (long k = -kmax; k <= kmax; ++k) {
    if (level > 0 && (k % 2 == 0)) continue;
    Node n = make_node(a, b, static_cast<double>(k) * h);
    if (n.from_left <= 0.0 || n.from_right <= 0.0 || n.weight == 0.0) continue;
    nodes.push_back(n);
  }
  return nodes;
}

std::vector<Complex> sample_serial(const EndpointIntegrand& f,
                                   const std::vector<Node>& nodes) {
  std::vector<Complex> out(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    out[i] = n.weight * f(n.x, n.from_left, n.from_right);
  }
  return out;
}

std::vector<Complex> sample_parallel(const EndpointIntegrand& f,
                                     const std::vector<Node>& nodes) {
  const long count = static_cast<long>(nodes.size());
  std::vector<Complex> out(nodes.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(static) if (count >= kParallelThreshold)
  for (long i = 0; i < count; ++i) {
    try {
      const Node& n = nodes[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i)] = n.weight * f(n.x, n.from_left, n.from_right);
    } catch (...) {
#pragma omp critical(citer_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<Complex> circle_samples_serial(const ComplexFunction& g,
                                           Complex center, double radius,
                                           int n) {
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    out[static_cast<std::size_t>(j)] =
        g(center + std::polar(radius, 2.0 * kPi * j / n));
  return out;
}

std::vector<Complex> circle_samples_parallel(const ComplexFunction& g,
                                             Complex center, double radius,
                                             int n) {
  std::vector<Complex> out(static_cast<std::size_t>(n));
  std::exception_ptr error;
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (int j = 0; j < n; ++j) {
    try {
      out[static_cast<std::size_t>(j)] =
          g(center + std::polar(radius, 2.0 * kPi * j / n));
    } catch (...) {
#pragma omp critical(citer_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

bool openmp_enabled() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace citer::kernels
