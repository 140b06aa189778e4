#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ncq {

// Solves a cyclic tridiagonal system A x = rhs with
//   diag: n entries, diag[i] = A[i][i]
//   sub:  n-1 entries, sub[i]  = A[i+1][i]
//   sup:  n-1 entries, sup[i]  = A[i][i+1]
//   corner_low = A[n-1][0], corner_up = A[0][n-1]  (periodic wrap)
// via Thomas elimination plus a rank-1 wrap correction. Fails with a
// numerical error if any pivot falls below 1e-14 of its row magnitude.
std::vector<std::complex<double>> solve_cyclic_tridiagonal(
    std::span<const std::complex<double>> diag,
    std::span<const std::complex<double>> sub,
    std::span<const std::complex<double>> sup,
    std::complex<double> corner_low, std::complex<double> corner_up,
    std::span<const std::complex<double>> rhs);

}  // namespace ncq
