#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "ncq/classical.hpp"
#include "ncq/solver.hpp"

using namespace ncq;

namespace {

// Closed-form underdamped oscillator released from rest at q0:
// q(t) = q0 e^{-gamma t} (cos wd t + (gamma/wd) sin wd t),
// gamma = k/2m, wd = sqrt(omega^2 - gamma^2).
double damped_oscillator_position(double q0, double omega, double k, double m,
                                  double t) {
  const double gamma = k / (2.0 * m);
  const double wd = std::sqrt(omega * omega - gamma * gamma);
  return q0 * std::exp(-gamma * t) *
         (std::cos(wd * t) + gamma / wd * std::sin(wd * t));
}

Trajectory damped_run(double dt, long n_steps, double k, double omega = 1.0) {
  PhysicsParams params;
  params.friction_k = k;
  ClassicalState initial;
  initial.q = {1.0};
  initial.v = {0.0};
  return integrate(initial, HarmonicPotential{omega, {0.0}}, params, dt,
                   n_steps);
}

}  // namespace

TEST_CASE("generalized force with the identity jacobian is the force") {
  const std::vector<std::vector<double>> forces = {{1.5, -2.0, 0.25}};
  const std::vector<std::vector<std::vector<double>>> identity = {
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const std::vector<double> q_force = generalized_force(forces, identity);
  REQUIRE(q_force.size() == 3);
  CHECK(q_force[0] == 1.5);
  CHECK(q_force[1] == -2.0);
  CHECK(q_force[2] == 0.25);
}

TEST_CASE("conservative generalized force is minus the potential gradient") {
  // F = -grad V for V = m w^2 |q - c|^2/2, checked against the
  // finite-difference gradient of V.
  PhysicsParams params;
  const PotentialSpec pot = HarmonicPotential{1.3, {0.4, -0.2}};
  const std::vector<double> q = {0.9, 0.7};
  const std::vector<double> grad = potential_gradient(pot, q, params);
  const std::vector<std::vector<double>> forces = {{-grad[0], -grad[1]}};
  const std::vector<std::vector<std::vector<double>>> identity = {
      {{1, 0}, {0, 1}}};
  const std::vector<double> q_force = generalized_force(forces, identity);

  const double h = 1e-6;
  for (int a = 0; a < 2; ++a) {
    std::vector<double> qp = q, qm = q;
    qp[static_cast<std::size_t>(a)] += h;
    qm[static_cast<std::size_t>(a)] -= h;
    const double fd_grad = (potential_value(pot, qp, params) -
                            potential_value(pot, qm, params)) /
                           (2.0 * h);
    CHECK(q_force[static_cast<std::size_t>(a)] ==
          doctest::Approx(-fd_grad).epsilon(1e-6));
  }
}

TEST_CASE("friction maps to the generalized force -k v") {
  const double k = 0.7;
  const std::vector<double> v = {0.3, -1.2};
  const std::vector<std::vector<double>> forces = {{-k * v[0], -k * v[1]}};
  const std::vector<std::vector<std::vector<double>>> identity = {
      {{1, 0}, {0, 1}}};
  const std::vector<double> q_force = generalized_force(forces, identity);
  CHECK(q_force[0] == doctest::Approx(-k * v[0]));
  CHECK(q_force[1] == doctest::Approx(-k * v[1]));
}

TEST_CASE("generalized force rejects ragged shapes") {
  CHECK_THROWS_AS(generalized_force({{1.0, 2.0}}, {{{1.0}}}), SimError);
  CHECK_THROWS_AS(generalized_force({}, {}), SimError);
}

TEST_CASE("equations of motion cover the basic limits") {
  PhysicsParams params;
  ClassicalState s;
  s.q = {0.7};
  s.v = {0.0};
  const ClassicalDerivatives free0 = eom_rhs(s, FreePotential{}, params);
  CHECK(free0.dv[0] == 0.0);

  const ClassicalDerivatives harm =
      eom_rhs(s, HarmonicPotential{2.0, {0.0}}, params);
  CHECK(harm.dv[0] == doctest::Approx(-4.0 * 0.7).epsilon(1e-14));
}

TEST_CASE("pure friction decays the velocity exponentially") {
  PhysicsParams params;
  params.friction_k = 0.8;
  ClassicalState initial;
  initial.q = {0.0};
  initial.v = {2.0};
  const Trajectory traj =
      integrate(initial, FreePotential{}, params, 1e-3, 1000);
  const double expected = 2.0 * std::exp(-0.8 * 1.0);
  CHECK(traj.samples.back().state.v[0] ==
        doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("damped oscillator matches the closed form at t = 1") {
  const Trajectory traj = damped_run(1e-3, 1000, 0.2);
  const double expected = damped_oscillator_position(1.0, 1.0, 0.2, 1.0, 1.0);
  CHECK(expected == doctest::Approx(0.5690).epsilon(1e-3));  // sanity anchor
  CHECK(std::abs(traj.samples.back().state.q[0] - expected) < 1e-8);
}

TEST_CASE("frictionless integration conserves energy over 10^4 steps") {
  const Trajectory traj = damped_run(1e-3, 10000, 0.0);
  const double e0 = traj.samples.front().kinetic + traj.samples.front().potential;
  for (const TrajectorySample& s : traj.samples)
    CHECK(std::abs(s.kinetic + s.potential - e0) < 1e-9);
}

TEST_CASE("work-energy balance: (T+V)(t) - (T+V)(0) = w_nc(t)") {
  const Trajectory traj = damped_run(1e-3, 2000, 0.2);
  const double e0 = traj.samples.front().kinetic + traj.samples.front().potential;
  for (const TrajectorySample& s : traj.samples) {
    const double drift = s.kinetic + s.potential - e0;
    CHECK(std::abs(drift - s.state.w_nc) < 1e-8);
  }
}

TEST_CASE("nonconservative work is non-positive and non-increasing") {
  const Trajectory traj = damped_run(5e-3, 2000, 0.35);
  double previous = 0.0;
  for (const TrajectorySample& s : traj.samples) {
    CHECK(s.state.w_nc <= 1e-15);
    CHECK(s.state.w_nc <= previous + 1e-15);
    previous = s.state.w_nc;
  }
}

TEST_CASE("general Lagrangian reduces to T - V without friction") {
  PhysicsParams params;
  ClassicalState s;
  s.q = {0.5};
  s.v = {1.5};
  s.w_nc = 0.0;
  const PotentialSpec pot = HarmonicPotential{1.0, {0.0}};
  const double expected = 0.5 * 1.5 * 1.5 - 0.5 * 0.5 * 0.5;
  CHECK(lagrangian_general(s, pot, params) ==
        doctest::Approx(expected).epsilon(1e-14));

  // At rest at the potential minimum the Lagrangian vanishes.
  s.q = {0.0};
  s.v = {0.0};
  CHECK(lagrangian_general(s, pot, params) == 0.0);
}

TEST_CASE("friction only raises the general Lagrangian above T - V") {
  // -w_nc = +k integral |v|^2 ddescribed along the path is >= 0.
  const Trajectory traj = damped_run(1e-3, 3000, 0.2);
  for (const TrajectorySample& s : traj.samples) {
    const double t_minus_v = s.kinetic - s.potential;
    CHECK(s.lagrangian >= t_minus_v - 1e-15);
  }
}

TEST_CASE("RK4 shows fourth-order global error against the closed form") {
  auto max_error = [&](double dt) {
    const Trajectory traj =
        damped_run(dt, static_cast<long>(std::lround(1.0 / dt)), 0.2);
    double worst = 0.0;
    for (const TrajectorySample& s : traj.samples)
      worst = std::max(worst,
                       std::abs(s.state.q[0] - damped_oscillator_position(
                                                   1.0, 1.0, 0.2, 1.0, s.state.t)));
    return worst;
  };
  const double ratio = max_error(1e-2) / max_error(5e-3);
  CHECK(ratio > 14.0);
  CHECK(ratio < 18.0);
}

TEST_CASE("Euler-Lagrange residual vanishes on a conservative trajectory") {
  // d/dt (dL/dv) - dL/dq = m dv/dt + dV/dq, evaluated by centered
  // differences on the stored samples.
  PhysicsParams params;
  const PotentialSpec pot = HarmonicPotential{1.0, {0.0}};
  const double dt = 1e-3;
  const Trajectory traj = damped_run(dt, 2000, 0.0);
  double sum_sq = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 1; i + 1 < traj.samples.size(); ++i) {
    const double dv_dt = (traj.samples[i + 1].state.v[0] -
                          traj.samples[i - 1].state.v[0]) /
                         (2.0 * dt);
    const double grad =
        potential_gradient(pot, traj.samples[i].state.q, params)[0];
    const double residual = params.mass * dv_dt + grad;
    sum_sq += residual * residual;
    ++count;
  }
  CHECK(std::sqrt(sum_sq / static_cast<double>(count)) < 1e-6);
}

TEST_CASE("action is additive across a split trajectory") {
  PhysicsParams params;
  params.friction_k = 0.2;
  const PotentialSpec pot = HarmonicPotential{1.0, {0.0}};
  ClassicalState initial;
  initial.q = {1.0};
  initial.v = {0.0};

  const Trajectory whole = integrate(initial, pot, params, 1e-3, 2000);

  const Trajectory first = integrate(initial, pot, params, 1e-3, 800);
  ClassicalState midpoint = first.samples.back().state;
  const Trajectory second = integrate(midpoint, pot, params, 1e-3, 1200);

  const double split_action =
      first.samples.back().action + second.samples.back().action;
  CHECK(std::abs(split_action - whole.samples.back().action) < 1e-10);
}

TEST_CASE("Ehrenfest comparison on identical series reports zero") {
  const Trajectory traj = damped_run(1e-2, 10, 0.0);
  std::vector<ObservableRecord> quantum;
  for (const TrajectorySample& s : traj.samples) {
    ObservableRecord rec;
    rec.time = s.state.t;
    rec.dim = 1;
    rec.norm = 1.0;
    rec.mean_position[0] = s.state.q[0];
    quantum.push_back(rec);
  }
  const DeviationReport report = compare_ehrenfest(quantum, traj);
  CHECK(report.max_abs == 0.0);
  CHECK(report.rms == 0.0);
  CHECK(report.n_compared == quantum.size());
}

TEST_CASE("Ehrenfest comparison rejects mismatched time grids") {
  const Trajectory traj = damped_run(1e-2, 10, 0.0);
  std::vector<ObservableRecord> quantum(1);
  quantum[0].time = 0.0055;  // between samples
  quantum[0].dim = 1;
  CHECK_THROWS_WITH_AS(compare_ehrenfest(quantum, traj),
                       doctest::Contains("no sample"), SimError);
}

TEST_CASE("coherent-state mean tracks the classical oscillator (k = 0)") {
  // Quadratic potential: Ehrenfest is exact up to discretization.
  PhysicsParams params;
  const Grid grid = Grid::line(-20.0, 20.0, 512);
  const double c[1] = {1.0};
  const double p[1] = {0.0};
  const double coherent_sigma = 1.0 / std::sqrt(2.0);
  const Wavefunction psi0 = init_gaussian(grid, params, c, coherent_sigma, p);
  const PotentialSpec pot = HarmonicPotential{1.0, {0.0}};
  EvolutionPlan plan{1e-3, 2000, 50, IntegratorChoice::split_step_strang};
  const EvolutionResult quantum = evolve(psi0, pot, params, plan);

  ClassicalState initial;
  initial.q = {1.0};
  initial.v = {0.0};
  const Trajectory classical = integrate(initial, pot, params, 1e-3, 2000);

  const DeviationReport report = compare_ehrenfest(quantum.records, classical);
  CHECK(report.max_abs <= 1e-4);
}

TEST_CASE("friction damps the classical path but not the quantum mean") {
  // With k > 0 the wave equation's damping is a scalar: normalized <x>
  // follows the frictionless oscillation while q(t) decays, so the
  // deviation between them grows. The report is informational.
  PhysicsParams params;
  params.friction_k = 0.3;
  const Grid grid = Grid::line(-20.0, 20.0, 512);
  const double c[1] = {1.0};
  const double p[1] = {0.0};
  const Wavefunction psi0 =
      init_gaussian(grid, params, c, 1.0 / std::sqrt(2.0), p);
  const PotentialSpec pot = HarmonicPotential{1.0, {0.0}};
  EvolutionPlan plan{1e-2, 300, 50, IntegratorChoice::split_step_strang};
  const EvolutionResult quantum = evolve(psi0, pot, params, plan);

  ClassicalState initial;
  initial.q = {1.0};
  initial.v = {0.0};
  const Trajectory classical = integrate(initial, pot, params, 1e-2, 300);

  const DeviationReport damped_report =
      compare_ehrenfest(quantum.records, classical);
  const double expected_gap =
      1.0 - std::exp(-params.friction_k / 2.0 * 3.0);  // envelope gap at t=3
  CHECK(damped_report.max_abs > 0.5 * expected_gap);
}
