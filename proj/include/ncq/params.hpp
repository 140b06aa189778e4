#pragma once

#include "ncq/errors.hpp"

namespace ncq {

// Physical constants of a run, in natural units by default.
//
// friction_k is the coefficient of the velocity-proportional friction force
// F = -k v. In the wave equation it enters only through the constant
// anti-Hermitian shift -i*hbar*dim*k/mass, so the quantum damping rate is
// dim*k/mass regardless of the state.
struct PhysicsParams {
  double hbar = 1.0;
  double mass = 1.0;
  double friction_k = 0.0;  // mass/time units, >= 0
  int dim = 1;              // spatial dimension, 1..3

  void validate() const {
    if (!(hbar > 0.0)) fail(ErrKind::invalid_argument, "hbar must be > 0");
    if (!(mass > 0.0)) fail(ErrKind::invalid_argument, "mass must be > 0");
    if (!(friction_k >= 0.0))
      fail(ErrKind::invalid_argument, "friction_k must be >= 0");
    if (dim < 1 || dim > 3)
      fail(ErrKind::invalid_argument, "dim must be 1, 2 or 3");
  }

  // Amplitude damping rate d*k/m of the wave equation.
  double damping_rate() const { return dim * friction_k / mass; }

  PhysicsParams with_friction(double k) const {
    PhysicsParams p = *this;
    p.friction_k = k;
    return p;
  }
};

}  // namespace ncq
