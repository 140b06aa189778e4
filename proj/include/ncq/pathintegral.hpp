#pragma once

#include <complex>

#include "ncq/potential.hpp"
#include "ncq/wavefunction.hpp"

namespace ncq {

// Parameters of one short-time propagator step of length epsilon.
// delta_reg is the dimensionless rotation epsilon -> epsilon*(1 - i delta)
// used to regularize the oscillatory quadrature oracle.
struct ShortTimeParams {
  double epsilon = 0.0;
  double delta_reg = 1e-2;
  PhysicsParams physics;

  // epsilon > 0, delta in (0, 0.1], and k*epsilon/m <= 0.1 (the linearized
  // friction phase is only valid in that regime).
  void validate() const;
};

// Closed forms of the 1-D chirp moments
//   integral of eta^order * exp(i m eta^2/(2 hbar eps)) d eta
// on the principal branch:
//   order 0 -> A = sqrt(i 2 pi hbar eps / m)
//   order 1 -> 0
//   order 2 -> (i hbar eps/m) A
//   order 4 -> 3 (i hbar eps/m)^2 A
// Accepts complex eps so the regularized values are available too.
std::complex<double> kernel_moment_closed(int order,
                                          std::complex<double> epsilon,
                                          const PhysicsParams& params);

// Independent oracle: trapezoid quadrature of the regularized integrand
// eta^order * exp(i m eta^2/(2 hbar eps (1 - i delta))) over the window
// |eta| <= 12 sqrt(2 hbar eps/m)/sqrt(delta), refined until successive
// doublings agree. Fails with a quadrature error when refinement stalls
// above 1e-8 relative.
std::complex<double> kernel_moment_quadrature(int order, double epsilon,
                                              const PhysicsParams& params,
                                              double delta);

// Fourier multiplier of the chirp convolution
//   (1/A^d) integral exp(i alpha eta^2) psi(r + eta) d eta,
//   alpha = (m + 2 k eps)/(2 hbar eps):
//   M(q) = (m/(m + 2 k eps))^(d/2) * exp(-i hbar eps |q|^2/(2(m + 2 k eps))).
// Follows from completing the square in the Fresnel integral; the test
// suite checks it against a direct regularized real-space convolution.
std::complex<double> fresnel_multiplier(double q_squared,
                                        std::complex<double> epsilon,
                                        const PhysicsParams& params);

// One short-time path-integral step: chirp convolution applied spectrally
// via fresnel_multiplier, then multiplication by exp(-i eps V(r)/hbar).
// Requires k*eps/m <= 0.1.
Wavefunction step_short_time(const Wavefunction& psi, const PotentialSpec& pot,
                             const PhysicsParams& params, double epsilon);

// Relative L2 defect between the one-step difference quotient and the
// generator it should approach:
//   || (step(psi,eps) - psi)/eps - R psi || / || R psi ||,
//   R psi = -(i/hbar) V psi + (i hbar/2m) lap psi - (d k/m) psi.
// First order in eps for smooth states.
double generator_defect(const Wavefunction& psi, const PotentialSpec& pot,
                        const PhysicsParams& params, double epsilon);

}  // namespace ncq
