#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ncq/grid.hpp"

struct fftw_plan_s;

namespace ncq {

// Discrete Fourier transform on a Grid (tensor-product, all axes at once),
// backed by FFTW with deterministic (FFTW_ESTIMATE) plans. forward() is the
// unnormalized DFT; inverse() divides by the total point count so that
// inverse(forward(x)) == x up to round-off.
//
// Plan creation is serialized internally (the FFTW planner is not
// thread-safe); executing transforms from different SpectralOp instances
// concurrently is fine.
class SpectralOp {
 public:
  explicit SpectralOp(const Grid& grid);
  ~SpectralOp();

  SpectralOp(SpectralOp&& other) noexcept;
  SpectralOp& operator=(SpectralOp&& other) noexcept;
  SpectralOp(const SpectralOp&) = delete;
  SpectralOp& operator=(const SpectralOp&) = delete;

  const Grid& grid() const { return grid_; }

  void forward(std::complex<double>* data) const;
  void inverse(std::complex<double>* data) const;

  // |q|^2 per flat index, precomputed.
  const std::vector<double>& q_squared() const { return q_squared_; }

  // Angular frequency of axis a per flat index.
  std::vector<double> q_axis(int a) const;

 private:
  Grid grid_;
  fftw_plan_s* forward_plan_ = nullptr;
  fftw_plan_s* inverse_plan_ = nullptr;
  std::vector<double> q_squared_;
};

}  // namespace ncq
