#include "ncq/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ncq::kernels {

namespace {

// Below this size the parallel entry points fall through to the serial
// loops; the fork/join overhead dominates there.
constexpr std::size_t kParallelCutoff = 16384;

struct KahanAcc {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  void merge(const KahanAcc& other) { add(other.sum); }
};

// The chirp phase grows to ~1e5 radians across the quadrature window;
// evaluating it in double would leave ~1e-11 argument-reduction noise in
// every term. Extended precision keeps the trapezoid noise floor below the
// refinement tolerance.
struct ChirpTermEval {
  long double re_coef, im_coef, window, h;
  std::complex<long double> operator()(std::size_t i, int order) const {
    const long double x = -window + h * static_cast<long double>(i);
    const long double x2 = x * x;
    long double xo = 1.0L;
    for (int o = 0; o < order; ++o) xo *= x;
    const long double mag = std::exp(re_coef * x2) * xo;
    const long double phase = im_coef * x2;
    return {mag * std::cos(phase), mag * std::sin(phase)};
  }
};

struct KahanAccL {
  long double sum_re = 0.0L, comp_re = 0.0L;
  long double sum_im = 0.0L, comp_im = 0.0L;
  void add(std::complex<long double> z) {
    {
      const long double y = z.real() - comp_re;
      const long double t = sum_re + y;
      comp_re = (t - sum_re) - y;
      sum_re = t;
    }
    {
      const long double y = z.imag() - comp_im;
      const long double t = sum_im + y;
      comp_im = (t - sum_im) - y;
      sum_im = t;
    }
  }
  cplx value() const {
    return {static_cast<double>(sum_re), static_cast<double>(sum_im)};
  }
  void merge(const KahanAccL& other) { add({other.sum_re, other.sum_im}); }
};

struct KahanAccC {
  KahanAcc re, im;
  void add(cplx x) {
    re.add(x.real());
    im.add(x.imag());
  }
  cplx value() const { return {re.sum, im.sum}; }
  void merge(const KahanAccC& other) { add(other.value()); }
};

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Static partition of [0, n) into blocks, one per thread; each thread
// accumulates its block with compensated summation and the partials are
// combined in block order. Reproducible for a fixed thread count.
template <class Acc, class Body>
Acc blocked_reduce(std::size_t n, Body&& body) {
  const int nt = thread_count();
  std::vector<Acc> partials(static_cast<std::size_t>(nt));
#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
  {
    const int t = omp_get_thread_num();
    const std::size_t lo = n * static_cast<std::size_t>(t) / static_cast<std::size_t>(nt);
    const std::size_t hi =
        n * (static_cast<std::size_t>(t) + 1) / static_cast<std::size_t>(nt);
    Acc acc;
    for (std::size_t i = lo; i < hi; ++i) body(acc, i);
    partials[static_cast<std::size_t>(t)] = acc;
  }
#else
  Acc acc;
  for (std::size_t i = 0; i < n; ++i) body(acc, i);
  partials[0] = acc;
#endif
  Acc total;
  for (const Acc& p : partials) total.merge(p);
  return total;
}

}  // namespace

namespace serial {

double norm_sq(std::span<const cplx> a) {
  KahanAcc acc;
  for (const cplx& z : a) acc.add(std::norm(z));
  return acc.sum;
}

double weighted_abs2(std::span<const cplx> a, std::span<const double> w) {
  KahanAcc acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc.add(w[i] * std::norm(a[i]));
  return acc.sum;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  KahanAccC acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc.add(std::conj(a[i]) * b[i]);
  return acc.value();
}

void multiply(std::span<cplx> a, std::span<const cplx> factors) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= factors[i];
}

void multiply_real(std::span<cplx> a, std::span<const double> factors) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= factors[i];
}

void scale(std::span<cplx> a, cplx s) {
  for (cplx& z : a) z *= s;
}

cplx chirp_moment_trapezoid(int order, cplx coef, double window,
                            std::size_t n_intervals) {
  const ChirpTermEval term{coef.real(), coef.imag(), window,
                           2.0L * static_cast<long double>(window) /
                               static_cast<long double>(n_intervals)};
  KahanAccL acc;
  for (std::size_t i = 0; i <= n_intervals; ++i) {
    std::complex<long double> t = term(i, order);
    if (i == 0 || i == n_intervals) t *= 0.5L;
    acc.add(t);
  }
  return acc.value() * (2.0 * window / static_cast<double>(n_intervals));
}

}  // namespace serial

double norm_sq(std::span<const cplx> a) {
  if (a.size() < kParallelCutoff) return serial::norm_sq(a);
  return blocked_reduce<KahanAcc>(
             a.size(), [&](KahanAcc& acc, std::size_t i) { acc.add(std::norm(a[i])); })
      .sum;
}

double weighted_abs2(std::span<const cplx> a, std::span<const double> w) {
  if (a.size() < kParallelCutoff) return serial::weighted_abs2(a, w);
  return blocked_reduce<KahanAcc>(a.size(),
                                  [&](KahanAcc& acc, std::size_t i) {
                                    acc.add(w[i] * std::norm(a[i]));
                                  })
      .sum;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() < kParallelCutoff) return serial::inner(a, b);
  return blocked_reduce<KahanAccC>(a.size(),
                                   [&](KahanAccC& acc, std::size_t i) {
                                     acc.add(std::conj(a[i]) * b[i]);
                                   })
      .value();
}

void multiply(std::span<cplx> a, std::span<const cplx> factors) {
  if (a.size() < kParallelCutoff) return serial::multiply(a, factors);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] *= factors[static_cast<std::size_t>(i)];
}

void multiply_real(std::span<cplx> a, std::span<const double> factors) {
  if (a.size() < kParallelCutoff) return serial::multiply_real(a, factors);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] *= factors[static_cast<std::size_t>(i)];
}

void scale(std::span<cplx> a, cplx s) {
  if (a.size() < kParallelCutoff) return serial::scale(a, s);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] *= s;
}

cplx chirp_moment_trapezoid(int order, cplx coef, double window,
                            std::size_t n_intervals) {
  if (n_intervals + 1 < kParallelCutoff)
    return serial::chirp_moment_trapezoid(order, coef, window, n_intervals);
  const ChirpTermEval term{coef.real(), coef.imag(), window,
                           2.0L * static_cast<long double>(window) /
                               static_cast<long double>(n_intervals)};
  KahanAccL total = blocked_reduce<KahanAccL>(
      n_intervals + 1, [&](KahanAccL& acc, std::size_t i) {
        std::complex<long double> t = term(i, order);
        if (i == 0 || i == n_intervals) t *= 0.5L;
        acc.add(t);
      });
  return total.value() * (2.0 * window / static_cast<double>(n_intervals));
}

}  // namespace ncq::kernels
