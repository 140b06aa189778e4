#pragma once

#include <span>
#include <variant>
#include <vector>

#include "ncq/grid.hpp"
#include "ncq/params.hpp"

namespace ncq {

struct FreePotential {};

// V(x) = (1/2) m omega^2 |x - center|^2
struct HarmonicPotential {
  double omega = 1.0;
  std::vector<double> center;  // one entry per axis; empty means origin
};

// V(x) = height inside the box |x_a - center_a| <= half_width on every axis,
// 0 outside.
struct BarrierPotential {
  double height = 0.0;
  double half_width = 0.0;
  std::vector<double> center;
};

// Values tabulated on a grid; evaluated off-lattice by multilinear
// interpolation with periodic wrap.
struct SampledPotential {
  Grid grid;
  std::vector<double> values;
};

using PotentialSpec = std::variant<FreePotential, HarmonicPotential,
                                   BarrierPotential, SampledPotential>;

// Validates the potential's invariants and its compatibility with `grid`
// (a SampledPotential must be tabulated on exactly that grid).
void validate_potential(const PotentialSpec& pot, const Grid& grid);

// V at every grid point, flat layout.
std::vector<double> sample_potential(const PotentialSpec& pot,
                                     const Grid& grid,
                                     const PhysicsParams& params);

// Pointwise evaluation at an arbitrary position (classical trajectories).
double potential_value(const PotentialSpec& pot, std::span<const double> q,
                       const PhysicsParams& params);

// Gradient at an arbitrary position. Analytic for Free/Harmonic/Barrier
// (the barrier step is a measure-zero edge; its gradient is 0 elsewhere),
// centered differences on the interpolant for Sampled. Fails if q is
// outside a sampled domain.
std::vector<double> potential_gradient(const PotentialSpec& pot,
                                       std::span<const double> q,
                                       const PhysicsParams& params);

}  // namespace ncq
