#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ncq/grid.hpp"
#include "ncq/params.hpp"

namespace ncq {

struct Wavefunction {
  Grid grid;
  std::vector<std::complex<double>> amps;
  double time = 0.0;

  // Checks size consistency and that every amplitude is finite.
  void validate() const;
};

// Normalized Gaussian packet
//   psi(x) ~ exp(-|x - center|^2/(4 sigma^2) + i p.x/hbar),
// scaled so that the discrete norm cellvol * sum |psi|^2 equals 1.
//
// Preconditions: sigma >= 3*spacing on every axis (resolvable packet) and
// center +- 5 sigma inside the domain on every axis.
Wavefunction init_gaussian(const Grid& grid, const PhysicsParams& params,
                           std::span<const double> center, double sigma,
                           std::span<const double> momentum);

}  // namespace ncq
