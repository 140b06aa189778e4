#include "ncq/classical.hpp"

#include <cmath>

namespace ncq {

namespace {

double kinetic_energy(const std::vector<double>& v, const PhysicsParams& p) {
  double v2 = 0.0;
  for (double c : v) v2 += c * c;
  return 0.5 * p.mass * v2;
}

void check_state(const ClassicalState& s) {
  if (s.q.empty() || s.q.size() > 3 || s.q.size() != s.v.size())
    fail(ErrKind::invalid_argument, "classical state needs matching q/v, 1-3 components");
  for (double c : s.q)
    if (!std::isfinite(c)) fail(ErrKind::numerical, "non-finite position");
  for (double c : s.v)
    if (!std::isfinite(c)) fail(ErrKind::numerical, "non-finite velocity");
  if (!std::isfinite(s.w_nc) || !std::isfinite(s.t))
    fail(ErrKind::numerical, "non-finite state scalar");
}

// Augmented phase point for the RK4 sweep: (q, v, w_nc, S).
struct Augmented {
  std::vector<double> q, v;
  double w = 0.0;
  double s = 0.0;
};

Augmented axpy(const Augmented& a, double h, const Augmented& b) {
  Augmented r = a;
  for (std::size_t i = 0; i < r.q.size(); ++i) {
    r.q[i] += h * b.q[i];
    r.v[i] += h * b.v[i];
  }
  r.w += h * b.w;
  r.s += h * b.s;
  return r;
}

}  // namespace

std::vector<double> generalized_force(
    const std::vector<std::vector<double>>& forces,
    const std::vector<std::vector<std::vector<double>>>& jacobian) {
  if (forces.empty() || forces.size() != jacobian.size())
    fail(ErrKind::invalid_argument,
         "generalized_force: one jacobian row per particle force");
  const std::size_t n_coords = jacobian[0].size();
  for (std::size_t i = 0; i < forces.size(); ++i) {
    if (jacobian[i].size() != n_coords)
      fail(ErrKind::invalid_argument,
           "generalized_force: ragged jacobian coordinate count");
    for (const auto& dr : jacobian[i])
      if (dr.size() != forces[i].size())
        fail(ErrKind::invalid_argument,
             "generalized_force: jacobian/force component mismatch");
  }

  std::vector<double> q_force(n_coords, 0.0);
  for (std::size_t j = 0; j < n_coords; ++j)
    for (std::size_t i = 0; i < forces.size(); ++i)
      for (std::size_t c = 0; c < forces[i].size(); ++c)
        q_force[j] += forces[i][c] * jacobian[i][j][c];
  return q_force;
}

ClassicalDerivatives eom_rhs(const ClassicalState& state,
                             const PotentialSpec& pot,
                             const PhysicsParams& params) {
  params.validate();
  check_state(state);
  const std::vector<double> grad = potential_gradient(pot, state.q, params);
  ClassicalDerivatives d;
  d.dq = state.v;
  d.dv.resize(state.v.size());
  for (std::size_t i = 0; i < state.v.size(); ++i)
    d.dv[i] = (-grad[i] - params.friction_k * state.v[i]) / params.mass;
  return d;
}

Trajectory integrate(const ClassicalState& initial, const PotentialSpec& pot,
                     const PhysicsParams& params, double dt, long n_steps) {
  params.validate();
  check_state(initial);
  if (!(dt > 0.0)) fail(ErrKind::invalid_argument, "dt must be > 0");
  if (n_steps < 0) fail(ErrKind::invalid_argument, "n_steps must be >= 0");

  // Augmented derivatives: dw/dt = -k |v|^2 (power of the friction force),
  // dS/dt = L = T - V - w.
  auto derivative = [&](const Augmented& y) {
    ClassicalState s{y.q, y.v, 0.0, y.w};
    const ClassicalDerivatives d = eom_rhs(s, pot, params);
    Augmented out;
    out.q = d.dq;
    out.v = d.dv;
    double v2 = 0.0;
    for (double c : y.v) v2 += c * c;
    out.w = -params.friction_k * v2;
    out.s = kinetic_energy(y.v, params) - potential_value(pot, y.q, params) - y.w;
    return out;
  };

  Augmented y{initial.q, initial.v, initial.w_nc, 0.0};
  Trajectory traj;
  traj.samples.reserve(static_cast<std::size_t>(n_steps) + 1);

  auto push_sample = [&](double t, const Augmented& state) {
    TrajectorySample sample;
    sample.state = ClassicalState{state.q, state.v, t, state.w};
    check_state(sample.state);
    sample.kinetic = kinetic_energy(state.v, params);
    sample.potential = potential_value(pot, state.q, params);
    sample.lagrangian = sample.kinetic - sample.potential - state.w;
    sample.action = state.s;
    if (!std::isfinite(sample.action) || !std::isfinite(sample.lagrangian))
      fail(ErrKind::numerical, "non-finite trajectory sample");
    traj.samples.push_back(std::move(sample));
  };

  push_sample(initial.t, y);
  for (long step = 1; step <= n_steps; ++step) {
    const Augmented k1 = derivative(y);
    const Augmented k2 = derivative(axpy(y, 0.5 * dt, k1));
    const Augmented k3 = derivative(axpy(y, 0.5 * dt, k2));
    const Augmented k4 = derivative(axpy(y, dt, k3));
    Augmented sum = k1;
    sum = axpy(sum, 2.0, k2);
    sum = axpy(sum, 2.0, k3);
    sum = axpy(sum, 1.0, k4);
    y = axpy(y, dt / 6.0, sum);
    push_sample(initial.t + static_cast<double>(step) * dt, y);
  }
  return traj;
}

double lagrangian_general(const ClassicalState& state, const PotentialSpec& pot,
                          const PhysicsParams& params) {
  params.validate();
  check_state(state);
  return kinetic_energy(state.v, params) -
         potential_value(pot, state.q, params) - state.w_nc;
}

DeviationReport compare_ehrenfest(std::span<const ObservableRecord> quantum,
                                  const Trajectory& classical) {
  if (quantum.empty() || classical.samples.empty())
    fail(ErrKind::invalid_argument, "compare_ehrenfest: empty inputs");

  DeviationReport report;
  double sum_sq = 0.0;
  std::size_t cursor = 0;
  for (const ObservableRecord& rec : quantum) {
    while (cursor < classical.samples.size() &&
           classical.samples[cursor].state.t < rec.time - 1e-9)
      ++cursor;
    if (cursor >= classical.samples.size() ||
        std::abs(classical.samples[cursor].state.t - rec.time) > 1e-9)
      fail(ErrKind::invalid_argument,
           "compare_ehrenfest: classical trajectory has no sample at t = " +
               std::to_string(rec.time));
    const ClassicalState& cs = classical.samples[cursor].state;
    if (cs.q.size() != static_cast<std::size_t>(rec.dim))
      fail(ErrKind::invalid_argument,
           "compare_ehrenfest: dimension mismatch");
    double dev_sq = 0.0;
    for (int a = 0; a < rec.dim; ++a) {
      const double d = rec.mean_position[static_cast<std::size_t>(a)] -
                       cs.q[static_cast<std::size_t>(a)];
      dev_sq += d * d;
    }
    const double dev = std::sqrt(dev_sq);
    report.max_abs = std::max(report.max_abs, dev);
    sum_sq += dev_sq;
    ++report.n_compared;
  }
  report.rms = std::sqrt(sum_sq / static_cast<double>(report.n_compared));
  return report;
}

}  // namespace ncq
