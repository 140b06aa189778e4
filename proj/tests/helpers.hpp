#pragma once

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "ncq/grid.hpp"
#include "ncq/wavefunction.hpp"

namespace testutil {

using cplx = std::complex<double>;

// O(n^2) reference DFT, independent of the FFT-backed code paths.
// sign = -1 matches SpectralOp::forward, +1 the unnormalized inverse.
inline std::vector<cplx> naive_dft_1d(const std::vector<cplx>& in, int sign) {
  const std::size_t n = in.size();
  std::vector<cplx> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = sign * 2.0 * std::numbers::pi *
                           static_cast<double>(k * j % n) / static_cast<double>(n);
      acc += in[j] * std::polar(1.0, angle);
    }
    out[k] = acc;
  }
  return out;
}

inline std::vector<cplx> random_amplitudes(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<cplx> a(n);
  for (cplx& z : a) z = {uni(rng), uni(rng)};
  return a;
}

inline ncq::Wavefunction random_state(const ncq::Grid& grid, unsigned seed) {
  ncq::Wavefunction psi;
  psi.grid = grid;
  psi.amps = random_amplitudes(grid.total_points(), seed);
  return psi;
}

// Smooth random state: a handful of low-frequency periodic modes.
inline ncq::Wavefunction smooth_random_state(const ncq::Grid& grid,
                                             unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  ncq::Wavefunction psi;
  psi.grid = grid;
  psi.amps.assign(grid.total_points(), 0.0);
  for (int mode = -3; mode <= 3; ++mode) {
    const cplx coef{uni(rng), uni(rng)};
    for (std::size_t i = 0; i < psi.amps.size(); ++i) {
      double phase = 0.0;
      for (int a = 0; a < grid.dim(); ++a) {
        const double x = grid.coordinate(a, grid.index_on_axis(i, a));
        phase += 2.0 * std::numbers::pi * mode * (x - grid.axis(a).x_min) /
                 grid.axis(a).length();
      }
      psi.amps[i] += coef * std::polar(1.0, phase);
    }
  }
  return psi;
}

inline double max_abs_diff(const std::vector<cplx>& a,
                           const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double l2_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

inline double l2_norm(const std::vector<cplx>& a) {
  double s = 0.0;
  for (const cplx& z : a) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace testutil
