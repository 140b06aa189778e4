#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace ncq::kernels {

using cplx = std::complex<double>;

// Data-parallel inner loops shared by the operators and the quadrature.
// The functions in this namespace run OpenMP-parallel above a size cutoff.
// Reductions use a fixed static partition with per-thread compensated
// accumulation, combined in thread order, so results are reproducible
// run-to-run for a fixed thread count.
//
// kernels::serial holds the plain single-threaded reference versions; the
// test suite checks the two against each other and tools/bench_kernels
// compares their throughput.

double norm_sq(std::span<const cplx> a);
double weighted_abs2(std::span<const cplx> a, std::span<const double> w);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
void multiply(std::span<cplx> a, std::span<const cplx> factors);
void multiply_real(std::span<cplx> a, std::span<const double> factors);
void scale(std::span<cplx> a, cplx s);

// Trapezoid sum of x^order * exp(coef*x^2) over [-window, window] with
// n_intervals uniform intervals (n_intervals + 1 nodes). Re(coef) <= 0.
cplx chirp_moment_trapezoid(int order, cplx coef, double window,
                            std::size_t n_intervals);

namespace serial {
double norm_sq(std::span<const cplx> a);
double weighted_abs2(std::span<const cplx> a, std::span<const double> w);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
void multiply(std::span<cplx> a, std::span<const cplx> factors);
void multiply_real(std::span<cplx> a, std::span<const double> factors);
void scale(std::span<cplx> a, cplx s);
cplx chirp_moment_trapezoid(int order, cplx coef, double window,
                            std::size_t n_intervals);
}  // namespace serial

}  // namespace ncq::kernels
