#include "ncq/linalg.hpp"

#include <cmath>

#include "ncq/errors.hpp"

namespace ncq {

namespace {

using cplx = std::complex<double>;

constexpr double kPivotTol = 1e-14;

// Thomas elimination without pivoting; callers must supply diagonally
// dominant systems (the Crank-Nicolson matrices are).
std::vector<cplx> solve_tridiagonal(std::span<const cplx> diag,
                                    std::span<const cplx> sub,
                                    std::span<const cplx> sup,
                                    std::span<const cplx> rhs) {
  const std::size_t n = diag.size();
  std::vector<cplx> c_prime(n, 0.0);
  std::vector<cplx> x(n, 0.0);

  auto row_magnitude = [&](std::size_t i) {
    double mag = std::abs(diag[i]);
    if (i > 0) mag += std::abs(sub[i - 1]);
    if (i + 1 < n) mag += std::abs(sup[i]);
    return mag;
  };

  cplx pivot = diag[0];
  if (std::abs(pivot) < kPivotTol * row_magnitude(0))
    fail(ErrKind::numerical, "singular tridiagonal system (pivot underflow)");
  c_prime[0] = sup[0] / pivot;
  x[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = diag[i] - sub[i - 1] * c_prime[i - 1];
    if (std::abs(pivot) < kPivotTol * row_magnitude(i))
      fail(ErrKind::numerical, "singular tridiagonal system (pivot underflow)");
    if (i + 1 < n) c_prime[i] = sup[i] / pivot;
    x[i] = (rhs[i] - sub[i - 1] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c_prime[i] * x[i + 1];
  return x;
}

}  // namespace

std::vector<cplx> solve_cyclic_tridiagonal(std::span<const cplx> diag,
                                           std::span<const cplx> sub,
                                           std::span<const cplx> sup,
                                           cplx corner_low, cplx corner_up,
                                           std::span<const cplx> rhs) {
  const std::size_t n = diag.size();
  if (n < 3 || sub.size() != n - 1 || sup.size() != n - 1 || rhs.size() != n)
    fail(ErrKind::invalid_argument, "bad cyclic tridiagonal shapes");

  // Rank-1 wrap correction: A = A' + u v^T with u = (gamma,0,...,0,alpha),
  // v = (1,0,...,0,beta/gamma), alpha = corner_low, beta = corner_up,
  // gamma = -diag[0] to keep the modified diagonal away from zero.
  const cplx gamma = -diag[0];
  const cplx alpha = corner_low;
  const cplx beta = corner_up;

  std::vector<cplx> diag_mod(diag.begin(), diag.end());
  diag_mod[0] -= gamma;
  diag_mod[n - 1] -= alpha * beta / gamma;

  std::vector<cplx> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = alpha;

  const std::vector<cplx> y = solve_tridiagonal(diag_mod, sub, sup, rhs);
  const std::vector<cplx> z = solve_tridiagonal(diag_mod, sub, sup, u);

  const cplx vy = y[0] + beta / gamma * y[n - 1];
  const cplx vz = z[0] + beta / gamma * z[n - 1];
  const cplx denom = 1.0 + vz;
  if (std::abs(denom) < kPivotTol)
    fail(ErrKind::numerical, "singular cyclic tridiagonal system");

  std::vector<cplx> x(n);
  const cplx factor = vy / denom;
  for (std::size_t i = 0; i < n; ++i) x[i] = y[i] - factor * z[i];
  return x;
}

}  // namespace ncq
