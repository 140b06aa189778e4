#include "ncq/pathintegral.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "ncq/kernels.hpp"
#include "ncq/spectral.hpp"

namespace ncq {

namespace {

using cplx = std::complex<double>;
using namespace std::complex_literals;

constexpr double kFrictionGuard = 0.1;

void check_friction_window(double epsilon, const PhysicsParams& params) {
  if (params.friction_k * epsilon / params.mass > kFrictionGuard)
    fail(ErrKind::precondition,
         "short-time guard violated: k*eps/m must be <= 0.1");
}

}  // namespace

void ShortTimeParams::validate() const {
  physics.validate();
  if (!(epsilon > 0.0)) fail(ErrKind::invalid_argument, "epsilon must be > 0");
  if (!(delta_reg > 0.0) || delta_reg > 0.1)
    fail(ErrKind::invalid_argument, "delta_reg must be in (0, 0.1]");
  check_friction_window(epsilon, physics);
}

cplx kernel_moment_closed(int order, cplx epsilon, const PhysicsParams& params) {
  params.validate();
  // Principal-branch normalization: for real eps > 0 the phase of A is pi/4
  // and (1/A) integral exp(i m eta^2/(2 hbar eps)) d eta = 1.
  const cplx i_he_m = 1i * params.hbar * epsilon / params.mass;
  const cplx a = std::sqrt(2.0 * std::numbers::pi * i_he_m);
  switch (order) {
    case 0:
      return a;
    case 1:
      return 0.0;
    case 2:
      return i_he_m * a;
    case 4:
      return 3.0 * i_he_m * i_he_m * a;
    default:
      fail(ErrKind::invalid_argument,
           "unsupported moment order (need 0, 1, 2 or 4)");
  }
}

cplx kernel_moment_quadrature(int order, double epsilon,
                              const PhysicsParams& params, double delta) {
  ShortTimeParams st{epsilon, delta, params};
  st.validate();
  if (order != 0 && order != 1 && order != 2 && order != 4)
    fail(ErrKind::invalid_argument,
         "unsupported moment order (need 0, 1, 2 or 4)");

  // eps -> eps (1 - i delta) turns the chirp into a decaying Gaussian of
  // width ~ sqrt(hbar eps/(m delta)); the window covers e^{-144} of it.
  const cplx eps_c = epsilon * cplx(1.0, -delta);
  const cplx coef = 1i * params.mass / (2.0 * params.hbar * eps_c);
  const double window =
      12.0 * std::sqrt(2.0 * params.hbar * epsilon / params.mass) /
      std::sqrt(delta);

  // Magnitude the convergence test is measured against; odd orders
  // integrate to ~0, so their own value cannot serve as the scale.
  const double scale =
      std::abs(kernel_moment_closed(0, eps_c, params)) *
      std::pow(params.hbar * epsilon / params.mass, 0.5 * order) *
      std::pow(3.0, 0.5 * order);

  constexpr std::size_t kStartIntervals = 1 << 14;
  constexpr std::size_t kMaxIntervals = 1 << 22;
  cplx previous =
      kernels::chirp_moment_trapezoid(order, coef, window, kStartIntervals);
  for (std::size_t n = kStartIntervals * 2; n <= kMaxIntervals; n *= 2) {
    const cplx current = kernels::chirp_moment_trapezoid(order, coef, window, n);
    // The odd moments integrate to ~0, so convergence is measured against
    // the even-moment magnitude as well as the value itself.
    const double tol =
        std::max(1e-10 * std::abs(current), 1e-12 * scale);
    if (std::abs(current - previous) <= tol) return current;
    previous = current;
  }
  fail(ErrKind::quadrature,
       "oscillatory moment quadrature did not converge (successive "
       "refinements differ by more than the 1e-8 relative tolerance)");
}

cplx fresnel_multiplier(double q_squared, cplx epsilon,
                        const PhysicsParams& params) {
  const double m = params.mass;
  const cplx m_eff = m + 2.0 * params.friction_k * epsilon;
  const cplx amplitude =
      std::pow(m / m_eff, 0.5 * static_cast<double>(params.dim));
  const cplx phase =
      std::exp(-1i * params.hbar * epsilon * q_squared / (2.0 * m_eff));
  return amplitude * phase;
}

Wavefunction step_short_time(const Wavefunction& psi, const PotentialSpec& pot,
                             const PhysicsParams& params, double epsilon) {
  params.validate();
  psi.validate();
  if (psi.grid.dim() != params.dim)
    fail(ErrKind::invalid_argument, "grid dimension does not match params.dim");
  if (!(epsilon > 0.0)) fail(ErrKind::invalid_argument, "epsilon must be > 0");
  check_friction_window(epsilon, params);

  SpectralOp op(psi.grid);
  Wavefunction out = psi;

  // Chirp convolution, diagonal in frequency space.
  op.forward(out.amps.data());
  const std::vector<double>& q2 = op.q_squared();
  for (std::size_t i = 0; i < out.amps.size(); ++i)
    out.amps[i] *= fresnel_multiplier(q2[i], epsilon, params);
  op.inverse(out.amps.data());

  // Endpoint potential phase (midpoint would differ at O(eps^2)).
  const std::vector<double> v = sample_potential(pot, psi.grid, params);
  for (std::size_t i = 0; i < out.amps.size(); ++i)
    out.amps[i] *= std::polar(1.0, -epsilon * v[i] / params.hbar);

  out.time = psi.time + epsilon;
  return out;
}

double generator_defect(const Wavefunction& psi, const PotentialSpec& pot,
                        const PhysicsParams& params, double epsilon) {
  const Wavefunction stepped = step_short_time(psi, pot, params, epsilon);

  SpectralOp op(psi.grid);
  const std::vector<double> v = sample_potential(pot, psi.grid, params);

  // R psi = -(i/hbar) V psi + (i hbar/2m) lap psi - (d k/m) psi.
  std::vector<cplx> lap = psi.amps;
  op.forward(lap.data());
  const std::vector<double>& q2 = op.q_squared();
  for (std::size_t i = 0; i < lap.size(); ++i) lap[i] *= -q2[i];
  op.inverse(lap.data());

  const cplx i_over_hbar = 1i / params.hbar;
  const cplx lap_coef = 1i * params.hbar / (2.0 * params.mass);
  const double damp = params.damping_rate();

  double defect_sq = 0.0;
  double generator_sq = 0.0;
  for (std::size_t i = 0; i < psi.amps.size(); ++i) {
    const cplx r = -i_over_hbar * v[i] * psi.amps[i] + lap_coef * lap[i] -
                   damp * psi.amps[i];
    const cplx quotient = (stepped.amps[i] - psi.amps[i]) / epsilon;
    defect_sq += std::norm(quotient - r);
    generator_sq += std::norm(r);
  }
  if (generator_sq <= 0.0)
    fail(ErrKind::precondition, "generator defect of a null generator image");
  return std::sqrt(defect_sq / generator_sq);
}

}  // namespace ncq
