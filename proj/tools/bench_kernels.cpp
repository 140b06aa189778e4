// Throughput comparison of the OpenMP kernels against their serial
// reference implementations.

#include <chrono>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ncq/kernels.hpp"

namespace {

using ncq::kernels::cplx;
using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <class F>
double time_op(F&& f, int reps) {
  f();  // warm up
  const auto t0 = clock_type::now();
  for (int r = 0; r < reps; ++r) f();
  return seconds_since(t0) / reps;
}

void report(const char* name, double serial_s, double parallel_s) {
  std::printf("%-28s serial %9.3f ms   parallel %9.3f ms   speedup %.2fx\n",
              name, serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s);
}

}  // namespace

int main() {
  constexpr std::size_t n = 1 << 22;
  constexpr int reps = 5;

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<cplx> a(n), b(n);
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = {uni(rng), uni(rng)};
    b[i] = {uni(rng), uni(rng)};
    w[i] = uni(rng);
  }

#ifdef _OPENMP
  std::printf("threads: %d, n = %zu\n", omp_get_max_threads(), n);
#else
  std::printf("built without OpenMP, n = %zu\n", n);
#endif

  volatile double guard = 0.0;  // keep results alive

  report("norm_sq",
         time_op([&] { guard = ncq::kernels::serial::norm_sq(a); }, reps),
         time_op([&] { guard = ncq::kernels::norm_sq(a); }, reps));

  report("weighted_abs2",
         time_op([&] { guard = ncq::kernels::serial::weighted_abs2(a, w); }, reps),
         time_op([&] { guard = ncq::kernels::weighted_abs2(a, w); }, reps));

  report("inner",
         time_op([&] { guard = ncq::kernels::serial::inner(a, b).real(); }, reps),
         time_op([&] { guard = ncq::kernels::inner(a, b).real(); }, reps));

  {
    std::vector<cplx> work = a;
    const double serial_s =
        time_op([&] { ncq::kernels::serial::multiply(work, b); }, reps);
    work = a;
    const double parallel_s =
        time_op([&] { ncq::kernels::multiply(work, b); }, reps);
    report("multiply", serial_s, parallel_s);
  }

  {
    const cplx coef(-2.5e-4, 1.0);  // decaying chirp
    const double window = 120.0;
    report("chirp_moment_trapezoid",
           time_op(
               [&] {
                 guard = ncq::kernels::serial::chirp_moment_trapezoid(
                             2, coef, window, n)
                             .real();
               },
               reps),
           time_op(
               [&] {
                 guard =
                     ncq::kernels::chirp_moment_trapezoid(2, coef, window, n)
                         .real();
               },
               reps));
  }

  (void)guard;
  return 0;
}
