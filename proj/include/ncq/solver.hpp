#pragma once

#include <functional>
#include <vector>

#include "ncq/observables.hpp"
#include "ncq/potential.hpp"
#include "ncq/wavefunction.hpp"

namespace ncq {

enum class IntegratorChoice { crank_nicolson, split_step_strang, exact_factored };

struct EvolutionPlan {
  double dt = 0.0;
  long n_steps = 0;
  long record_every = 1;
  IntegratorChoice integrator = IntegratorChoice::split_step_strang;

  // dt > 0, n_steps >= 0, record_every >= 1. Crank-Nicolson and Strang
  // splitting additionally require k*dt/m <= 0.1: past that the friction
  // factor is no longer in the small-step regime the schemes assume.
  void validate(const PhysicsParams& params) const;
};

// One implicit-midpoint (Cayley) step of i*hbar dpsi/dt = H psi, with H
// built from a 3-point periodic Laplacian plus the diagonal
// V - i*hbar*d*k/m. Solves the cyclic tridiagonal system
//   (1 + i dt H/(2 hbar)) psi' = (1 - i dt H/(2 hbar)) psi.
// 1-D grids only.
Wavefunction step_crank_nicolson(const Wavefunction& psi,
                                 const PotentialSpec& pot,
                                 const PhysicsParams& params, double dt);

// Strang splitting: half potential phase, exact spectral kinetic step,
// half potential phase. The constant damping commutes with everything and
// is folded in as the exact scalar factor exp(-d*k*dt/m), so the norm
// shrinks by exactly exp(-2*d*k*dt/m) per step up to round-off.
Wavefunction step_split_fourier(const Wavefunction& psi,
                                const PotentialSpec& pot,
                                const PhysicsParams& params, double dt);

// Oracle integrator: advances the k = 0 problem by Strang splitting and
// multiplies by exp(-d*k*dt/m). The damped state is exactly the scalar
// times the frictionless evolution, so this route has no additional error
// from the friction term at all.
Wavefunction step_exact_factored(const Wavefunction& psi,
                                 const PotentialSpec& pot,
                                 const PhysicsParams& params, double dt);

struct EvolutionResult {
  Wavefunction state;
  std::vector<ObservableRecord> records;
};

using RecordSink =
    std::function<void(const ObservableRecord&, const Wavefunction&)>;

// Applies the chosen stepper n_steps times, recording observables at step 0,
// every record_every steps, and at the final step. Aborts with a numerical
// error if a recorded state contains non-finite amplitudes.
EvolutionResult evolve(const Wavefunction& psi0, const PotentialSpec& pot,
                       const PhysicsParams& params, const EvolutionPlan& plan,
                       const RecordSink& sink = {});

}  // namespace ncq
