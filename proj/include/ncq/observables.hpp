#pragma once

#include <array>

#include "ncq/potential.hpp"
#include "ncq/spectral.hpp"
#include "ncq/wavefunction.hpp"

namespace ncq {

struct ObservableRecord {
  double time = 0.0;
  double norm = 0.0;
  int dim = 1;
  std::array<double, 3> mean_position{};  // entries [0, dim)
  std::array<double, 3> mean_momentum{};
  double mean_energy_h0 = 0.0;  // <psi| -hbar^2 lap/2m + V |psi> / norm
};

// Applies H = -hbar^2 lap/(2m) + V - i*hbar*(d*k/m) with a spectral
// Laplacian on the periodic grid. Returns H psi as a fresh state.
Wavefunction apply_hamiltonian(const Wavefunction& psi,
                               const PotentialSpec& pot,
                               const PhysicsParams& params);
Wavefunction apply_hamiltonian(const Wavefunction& psi,
                               const PotentialSpec& pot,
                               const PhysicsParams& params,
                               const SpectralOp& op);

// norm = cellvol * sum |psi|^2; positions from the lattice; momenta and
// kinetic energy from the discrete spectral derivative (evaluated as
// frequency-space sums via Parseval, which is the same operator). All
// expectation values are normalized by the current norm. Fails on
// norm < 1e-300 instead of dividing.
ObservableRecord observables(const Wavefunction& psi,
                             const PhysicsParams& params,
                             const PotentialSpec& pot);
ObservableRecord observables(const Wavefunction& psi,
                             const PhysicsParams& params,
                             const PotentialSpec& pot, const SpectralOp& op);

}  // namespace ncq
