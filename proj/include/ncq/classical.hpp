#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ncq/observables.hpp"
#include "ncq/potential.hpp"

namespace ncq {

struct ClassicalState {
  std::vector<double> q;
  std::vector<double> v;
  double t = 0.0;
  // Accumulated nonconservative work along the trajectory,
  // integral of F_nc . dr = -k |v|^2 dt. Non-positive for k >= 0.
  double w_nc = 0.0;
};

struct TrajectorySample {
  ClassicalState state;
  double kinetic = 0.0;
  double potential = 0.0;
  double lagrangian = 0.0;  // T - V - w_nc
  double action = 0.0;      // running integral of the Lagrangian
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
};

// Q_j = sum_i F_i . dr_i/dq_j.
// forces[i] is the force on particle i; jacobian[i][j] is dr_i/dq_j.
std::vector<double> generalized_force(
    const std::vector<std::vector<double>>& forces,
    const std::vector<std::vector<std::vector<double>>>& jacobian);

struct ClassicalDerivatives {
  std::vector<double> dq;
  std::vector<double> dv;
};

// Cartesian equations of motion with velocity friction:
//   dq/dt = v,  m dv/dt = -grad V(q) - k v.
ClassicalDerivatives eom_rhs(const ClassicalState& state,
                             const PotentialSpec& pot,
                             const PhysicsParams& params);

// Fixed-step RK4 on the state augmented with w_nc and the running action,
// so both integrals carry the scheme's full order. Records every step,
// including the initial state. Aborts on non-finite values.
Trajectory integrate(const ClassicalState& initial, const PotentialSpec& pot,
                     const PhysicsParams& params, double dt, long n_steps);

// L = T - V - w_nc; reduces to T - V when no nonconservative work has
// accumulated.
double lagrangian_general(const ClassicalState& state, const PotentialSpec& pot,
                          const PhysicsParams& params);

struct DeviationReport {
  double max_abs = 0.0;
  double rms = 0.0;
  std::size_t n_compared = 0;
};

// Compares quantum <x>(t) against the classical q(t) at matching time
// stamps (Euclidean norm over axes). Fails if the time grids do not line
// up within 1e-9.
DeviationReport compare_ehrenfest(std::span<const ObservableRecord> quantum,
                                  const Trajectory& classical);

}  // namespace ncq
