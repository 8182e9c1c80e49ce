// Times the OpenMP kernels against their serial references and checks that
// both produce identical bits. Usage: bench_kernels [m] [reps]
#include <cstdio>
#include <cstdlib>
#include <chrono>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "relmcl/dual_mcl.hpp"
#include "relmcl/kde.hpp"
#include "relmcl/rng.hpp"
#include "relmcl/standard_pf.hpp"

using namespace relmcl;

namespace {

double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    double t0 = now_s();
    f();
    best = std::min(best, now_s() - t0);
  }
  return best;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int m = argc > 1 ? std::atoi(argv[1]) : 2000;
  int reps = argc > 2 ? std::atoi(argv[2]) : 5;
  if (m < 1 || reps < 1) {
    std::fprintf(stderr, "usage: bench_kernels [m >= 1] [reps >= 1]\n");
    return 2;
  }

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP\n");
#endif
  std::printf("m = %d centers/queries, best of %d reps\n\n", m, reps);

  Rng rng(7);
  std::vector<Vec2> centers(static_cast<std::size_t>(m));
  std::vector<Vec2> queries(static_cast<std::size_t>(m));
  for (auto& c : centers) c = rng.normal2({0.0, 0.0}, {1.0, 1.0});
  for (auto& q : queries) q = rng.normal2({0.0, 0.0}, {1.5, 1.5});
  KernelDensity2D kde(centers, {0.3, 0.3});

  std::vector<double> par, ser;
  double t_par = best_of(reps, [&] { par = kde.evaluate(queries); });
  double t_ser = best_of(reps, [&] { ser = kde.evaluate_serial(queries); });
  std::printf("kde evaluate   serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n",
              t_ser * 1e3, t_par * 1e3, t_ser / t_par,
              same_bits(par, ser) ? "bits equal" : "MISMATCH");

  RangeTriple d{2.2, 2.9, 2.5};
  AnchorLayout layout{1.0};
  std::array<double, 3> sigma{0.1, 0.1, 0.1};
  double t_wpar =
      best_of(reps, [&] { par = range_likelihood_weights(queries, d, sigma, layout); });
  double t_wser = best_of(
      reps, [&] { ser = range_likelihood_weights_serial(queries, d, sigma, layout); });
  std::printf("pf weights     serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n",
              t_wser * 1e3, t_wpar * 1e3, t_wser / t_wpar,
              same_bits(par, ser) ? "bits equal" : "MISMATCH");

  return 0;
}
