// Serial reference against OpenMP sampling on the heavier workloads.
// Prints best-of-N wall times and whether both variants agree bit for bit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "citer/engine.hpp"
#include "citer/kernels.hpp"
#include "citer/zeta.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace citer;

namespace {

template <class F>
double best_ms(F&& f, int reps, Complex& out) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    out = f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, const std::function<Complex(const QuadratureConfig&)>& work, int reps) {
  QuadratureConfig serial, parallel;
  serial.parallel = false;
  parallel.parallel = true;
  Complex a, b;
  const double ts = best_ms([&] { return work(serial); }, reps, a);
  const double tp = best_ms([&] { return work(parallel); }, reps, b);
  std::printf("%-34s %10.2f %10.2f %8.2fx   %s\n", name, ts, tp, ts / tp, a == b ? "identical" : "DIFFERENT");
}

}  // namespace

int main() {
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::printf("threads: %d, openmp: %s\n\n", threads, kernels::openmp_enabled() ? "on" : "off");
  std::printf("%-34s %10s %10s %9s   %s\n", "workload", "serial ms", "omp ms", "speedup", "results");

  // a deliberately slow integrand on a deep tanh-sinh ladder
  auto heavy = [](double x, double, double) {
    Complex acc = 0;
    for (int k = 1; k <= 200; ++k) acc += std::exp(Complex(-k * x, std::sin(k * x))) / static_cast<double>(k);
    return acc;
  };
  row("tanh-sinh level 12, costly f", [&](const QuadratureConfig& cfg) {
        const auto nodes = kernels::tanh_sinh_nodes(0.0, 1.0, 12);
        const auto v = cfg.parallel ? kernels::sample_parallel(heavy, nodes) : kernels::sample_serial(heavy, nodes);
        return pairwise_sum(v);
      }, 3);
  row("moebius power integral, s = 3", [](const QuadratureConfig& cfg) {
        return power_iterated_integral(moebius_series(200000), 3.0, 0.0, cfg);
      }, 3);
  row("depth-2 zeta(3, 2)", [](const QuadratureConfig& cfg) { return mzv({3.0, 2.0}, cfg); }, 3);
  row("Dedekind zeta Q(i) at 2.5", [](const QuadratureConfig& cfg) { return dedekind_zeta_transform(-4, 2.5, cfg); },
      3);
  row("Hurwitz depth 2, z = 0.3", [](const QuadratureConfig& cfg) { return hurwitz_mzv({3.0, 2.0}, 0.3, cfg); }, 3);
  return 0;
}
