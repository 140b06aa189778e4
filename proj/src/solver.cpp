#include "ncq/solver.hpp"

#include <cmath>
#include <complex>

#include "ncq/kernels.hpp"
#include "ncq/linalg.hpp"
#include "ncq/spectral.hpp"

namespace ncq {

namespace {

using cplx = std::complex<double>;

void check_step_inputs(const Wavefunction& psi, const PhysicsParams& params,
                       double dt) {
  params.validate();
  psi.validate();
  if (psi.grid.dim() != params.dim)
    fail(ErrKind::invalid_argument, "grid dimension does not match params.dim");
  if (!(dt >= 0.0)) fail(ErrKind::invalid_argument, "dt must be >= 0");
}

// Strang split step with the friction factor folded into the kinetic
// multiplier. With damp = 1 this is the plain frictionless splitting.
class SplitStepper {
 public:
  SplitStepper(const Grid& grid, const PotentialSpec& pot,
               const PhysicsParams& params, double dt, bool with_damping)
      : op_(grid), dt_(dt) {
    const std::vector<double> v = sample_potential(pot, grid, params);
    const std::size_t n = grid.total_points();

    half_potential_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      half_potential_[i] = std::polar(1.0, -0.5 * dt * v[i] / params.hbar);

    const double damp =
        with_damping ? std::exp(-params.damping_rate() * dt) : 1.0;
    const double kin = params.hbar * dt / (2.0 * params.mass);
    kinetic_.resize(n);
    const std::vector<double>& q2 = op_.q_squared();
    for (std::size_t i = 0; i < n; ++i)
      kinetic_[i] = damp * std::polar(1.0, -kin * q2[i]);
  }

  void step(Wavefunction& psi) const {
    kernels::multiply(psi.amps, half_potential_);
    op_.forward(psi.amps.data());
    kernels::multiply(psi.amps, kinetic_);
    op_.inverse(psi.amps.data());
    kernels::multiply(psi.amps, half_potential_);
    psi.time += dt_;
  }

 private:
  SpectralOp op_;
  double dt_;
  std::vector<cplx> half_potential_;
  std::vector<cplx> kinetic_;
};

// Factored oracle: frictionless Strang step, then the exact scalar damp
// factor. Algebraically identical to SplitStepper with damping; kept as a
// separate route so the two can be checked against each other.
class ExactFactoredStepper {
 public:
  ExactFactoredStepper(const Grid& grid, const PotentialSpec& pot,
                       const PhysicsParams& params, double dt)
      : base_(grid, pot, params.with_friction(0.0), dt, false),
        damp_(std::exp(-params.damping_rate() * dt)) {}

  void step(Wavefunction& psi) const {
    base_.step(psi);
    if (damp_ != 1.0) kernels::scale(psi.amps, damp_);
  }

 private:
  SplitStepper base_;
  double damp_;
};

// Implicit midpoint (Cayley) step on a 1-D periodic grid with the 3-point
// finite-difference Laplacian: deliberately a different spatial
// discretization from the spectral steppers.
class CrankNicolsonStepper {
 public:
  CrankNicolsonStepper(const Grid& grid, const PotentialSpec& pot,
                       const PhysicsParams& params, double dt)
      : dt_(dt) {
    if (grid.dim() != 1)
      fail(ErrKind::precondition, "Crank-Nicolson stepper is 1-D only");
    const std::vector<double> v = sample_potential(pot, grid, params);
    const std::size_t n = grid.total_points();
    const double dx = grid.axis(0).spacing();
    const double hopping = params.hbar * params.hbar /
                           (2.0 * params.mass * dx * dx);  // -lap prefactor
    const cplx damping(0.0, -params.hbar * params.damping_rate());
    const cplx i_half_dt(0.0, 0.5 * dt / params.hbar);

    diag_a_.resize(n);
    diag_b_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx h_diag = 2.0 * hopping + v[i] + damping;
      diag_a_[i] = 1.0 + i_half_dt * h_diag;
      diag_b_[i] = 1.0 - i_half_dt * h_diag;
    }
    off_a_ = i_half_dt * (-hopping);
    off_b_ = -i_half_dt * (-hopping);
    sub_a_.assign(n - 1, off_a_);
    sup_a_.assign(n - 1, off_a_);
  }

  void step(Wavefunction& psi) const {
    const std::size_t n = psi.amps.size();
    std::vector<cplx> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx left = psi.amps[(i + n - 1) % n];
      const cplx right = psi.amps[(i + 1) % n];
      rhs[i] = diag_b_[i] * psi.amps[i] + off_b_ * (left + right);
    }
    psi.amps = solve_cyclic_tridiagonal(diag_a_, sub_a_, sup_a_, off_a_,
                                        off_a_, rhs);
    psi.time += dt_;
  }

 private:
  double dt_;
  std::vector<cplx> diag_a_, diag_b_;
  std::vector<cplx> sub_a_, sup_a_;
  cplx off_a_, off_b_;
};

}  // namespace

void EvolutionPlan::validate(const PhysicsParams& params) const {
  params.validate();
  if (!(dt > 0.0)) fail(ErrKind::invalid_argument, "plan dt must be > 0");
  if (n_steps < 0) fail(ErrKind::invalid_argument, "plan n_steps must be >= 0");
  if (record_every < 1)
    fail(ErrKind::invalid_argument, "plan record_every must be >= 1");
  if (integrator != IntegratorChoice::exact_factored &&
      params.friction_k * dt / params.mass > 0.1)
    fail(ErrKind::precondition,
         "step-size guard violated: k*dt/m must be <= 0.1 for "
         "Crank-Nicolson and Strang splitting");
}

Wavefunction step_crank_nicolson(const Wavefunction& psi,
                                 const PotentialSpec& pot,
                                 const PhysicsParams& params, double dt) {
  check_step_inputs(psi, params, dt);
  if (dt == 0.0) return psi;
  CrankNicolsonStepper stepper(psi.grid, pot, params, dt);
  Wavefunction out = psi;
  stepper.step(out);
  return out;
}

Wavefunction step_split_fourier(const Wavefunction& psi,
                                const PotentialSpec& pot,
                                const PhysicsParams& params, double dt) {
  check_step_inputs(psi, params, dt);
  if (dt == 0.0) return psi;
  SplitStepper stepper(psi.grid, pot, params, dt, true);
  Wavefunction out = psi;
  stepper.step(out);
  return out;
}

Wavefunction step_exact_factored(const Wavefunction& psi,
                                 const PotentialSpec& pot,
                                 const PhysicsParams& params, double dt) {
  check_step_inputs(psi, params, dt);
  if (dt == 0.0) return psi;
  ExactFactoredStepper stepper(psi.grid, pot, params, dt);
  Wavefunction out = psi;
  stepper.step(out);
  return out;
}

EvolutionResult evolve(const Wavefunction& psi0, const PotentialSpec& pot,
                       const PhysicsParams& params, const EvolutionPlan& plan,
                       const RecordSink& sink) {
  plan.validate(params);
  psi0.validate();
  validate_potential(pot, psi0.grid);

  EvolutionResult result;
  result.state = psi0;
  SpectralOp observable_op(psi0.grid);

  auto record = [&](long step) {
    for (const cplx& z : result.state.amps)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        fail(ErrKind::numerical,
             "non-finite amplitude detected at step " + std::to_string(step) +
                 " (t = " + std::to_string(result.state.time) + ")");
    const ObservableRecord rec =
        observables(result.state, params, pot, observable_op);
    result.records.push_back(rec);
    if (sink) sink(rec, result.state);
  };

  record(0);
  if (plan.n_steps == 0) return result;

  std::variant<SplitStepper, ExactFactoredStepper, CrankNicolsonStepper>
      stepper = [&]() -> std::variant<SplitStepper, ExactFactoredStepper,
                                      CrankNicolsonStepper> {
    switch (plan.integrator) {
      case IntegratorChoice::split_step_strang:
        return SplitStepper(psi0.grid, pot, params, plan.dt, true);
      case IntegratorChoice::exact_factored:
        return ExactFactoredStepper(psi0.grid, pot, params, plan.dt);
      case IntegratorChoice::crank_nicolson:
      default:
        return CrankNicolsonStepper(psi0.grid, pot, params, plan.dt);
    }
  }();

  for (long step = 1; step <= plan.n_steps; ++step) {
    std::visit([&](const auto& s) { s.step(result.state); }, stepper);
    // Stamp from the step index; repeated += dt would drift the stamps.
    result.state.time = psi0.time + static_cast<double>(step) * plan.dt;
    if (step % plan.record_every == 0 || step == plan.n_steps) record(step);
  }
  return result;
}

}  // namespace ncq
