#include "ncq/observables.hpp"

#include <cmath>

#include "ncq/kernels.hpp"

namespace ncq {

namespace {

void check_compatible(const Wavefunction& psi, const PhysicsParams& params) {
  params.validate();
  psi.validate();
  if (psi.grid.dim() != params.dim)
    fail(ErrKind::invalid_argument, "grid dimension does not match params.dim");
}

}  // namespace

Wavefunction apply_hamiltonian(const Wavefunction& psi, const PotentialSpec& pot,
                               const PhysicsParams& params) {
  SpectralOp op(psi.grid);
  return apply_hamiltonian(psi, pot, params, op);
}

Wavefunction apply_hamiltonian(const Wavefunction& psi, const PotentialSpec& pot,
                               const PhysicsParams& params,
                               const SpectralOp& op) {
  check_compatible(psi, params);
  const std::vector<double> v = sample_potential(pot, psi.grid, params);

  // Kinetic part: multiply by hbar^2 q^2/(2m) in frequency space.
  Wavefunction out = psi;
  op.forward(out.amps.data());
  const std::vector<double>& q2 = op.q_squared();
  const double kin_factor = params.hbar * params.hbar / (2.0 * params.mass);
  for (std::size_t i = 0; i < out.amps.size(); ++i)
    out.amps[i] *= kin_factor * q2[i];
  op.inverse(out.amps.data());

  // Diagonal part: V - i hbar d k/m.
  const std::complex<double> shift(0.0, -params.hbar * params.damping_rate());
  for (std::size_t i = 0; i < out.amps.size(); ++i)
    out.amps[i] += (v[i] + shift) * psi.amps[i];
  return out;
}

ObservableRecord observables(const Wavefunction& psi, const PhysicsParams& params,
                             const PotentialSpec& pot) {
  SpectralOp op(psi.grid);
  return observables(psi, params, pot, op);
}

ObservableRecord observables(const Wavefunction& psi, const PhysicsParams& params,
                             const PotentialSpec& pot, const SpectralOp& op) {
  check_compatible(psi, params);
  const Grid& grid = psi.grid;
  const std::size_t n = grid.total_points();
  const double vol = grid.cell_volume();

  ObservableRecord rec;
  rec.time = psi.time;
  rec.dim = grid.dim();
  rec.norm = vol * kernels::norm_sq(psi.amps);
  if (rec.norm < 1e-300)
    fail(ErrKind::precondition, "observables of a zero-norm state");

  std::vector<double> weights(n);
  for (int a = 0; a < grid.dim(); ++a) {
    for (std::size_t i = 0; i < n; ++i)
      weights[i] = grid.coordinate(a, grid.index_on_axis(i, a));
    rec.mean_position[static_cast<std::size_t>(a)] =
        vol * kernels::weighted_abs2(psi.amps, weights) / rec.norm;
  }

  // Momentum and kinetic energy via the spectral derivative, summed in
  // frequency space (Parseval form of <psi|op|psi>).
  std::vector<std::complex<double>> hat = psi.amps;
  op.forward(hat.data());
  const double spectral_norm = vol / static_cast<double>(n);
  for (int a = 0; a < grid.dim(); ++a) {
    const std::vector<double> q = op.q_axis(a);
    rec.mean_momentum[static_cast<std::size_t>(a)] =
        spectral_norm * params.hbar * kernels::weighted_abs2(hat, q) / rec.norm;
  }

  const double kin_factor = params.hbar * params.hbar / (2.0 * params.mass);
  const double kinetic =
      spectral_norm * kin_factor * kernels::weighted_abs2(hat, op.q_squared());
  const std::vector<double> v = sample_potential(pot, grid, params);
  const double potential_energy = vol * kernels::weighted_abs2(psi.amps, v);
  rec.mean_energy_h0 = (kinetic + potential_energy) / rec.norm;
  return rec;
}

}  // namespace ncq
