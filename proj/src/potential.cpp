#include "ncq/potential.hpp"

#include <cmath>
#include <cstdlib>

namespace ncq {

namespace {

double axis_center(const std::vector<double>& center, int a) {
  if (center.empty()) return 0.0;
  return center[static_cast<std::size_t>(a)];
}

void check_center(const std::vector<double>& center, const char* what) {
  if (!center.empty() && center.size() > 3)
    fail(ErrKind::invalid_argument, std::string(what) + ": bad center size");
}

// Position folded into [x_min, x_max) and converted to a fractional index.
double fractional_index(const Axis& ax, double x) {
  const double L = ax.length();
  double rel = std::fmod(x - ax.x_min, L);
  if (rel < 0.0) rel += L;
  return rel / ax.spacing();
}

double sampled_interpolate(const SampledPotential& sp,
                           std::span<const double> q) {
  const Grid& g = sp.grid;
  const int d = g.dim();
  int base[3] = {0, 0, 0};
  double frac[3] = {0.0, 0.0, 0.0};
  for (int a = 0; a < d; ++a) {
    const Axis& ax = g.axis(a);
    if (q[a] < ax.x_min || q[a] >= ax.x_max)
      fail(ErrKind::precondition,
           "position outside sampled potential domain on axis " +
               std::to_string(a));
    const double fi = fractional_index(ax, q[a]);
    base[a] = static_cast<int>(fi);
    frac[a] = fi - base[a];
  }
  double value = 0.0;
  for (int corner = 0; corner < (1 << d); ++corner) {
    double weight = 1.0;
    std::size_t flat = 0;
    std::size_t stride = 1;
    for (int a = 0; a < d; ++a) {
      const int n = g.axis(a).n_points;
      const bool hi = (corner >> a) & 1;
      const int idx = (base[a] + (hi ? 1 : 0)) % n;
      weight *= hi ? frac[a] : 1.0 - frac[a];
      flat += stride * static_cast<std::size_t>(idx);
      stride *= static_cast<std::size_t>(n);
    }
    value += weight * sp.values[flat];
  }
  return value;
}

}  // namespace

void validate_potential(const PotentialSpec& pot, const Grid& grid) {
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, HarmonicPotential>) {
          if (!(p.omega > 0.0))
            fail(ErrKind::invalid_argument, "harmonic omega must be > 0");
          check_center(p.center, "harmonic");
        } else if constexpr (std::is_same_v<T, BarrierPotential>) {
          if (!(p.half_width > 0.0))
            fail(ErrKind::invalid_argument, "barrier half_width must be > 0");
          check_center(p.center, "barrier");
        } else if constexpr (std::is_same_v<T, SampledPotential>) {
          if (p.values.size() != p.grid.total_points())
            fail(ErrKind::invalid_argument,
                 "sampled potential length does not match its grid");
          if (!(p.grid == grid))
            fail(ErrKind::invalid_argument,
                 "sampled potential grid differs from the run grid");
        }
      },
      pot);
}

double potential_value(const PotentialSpec& pot, std::span<const double> q,
                       const PhysicsParams& params) {
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FreePotential>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, HarmonicPotential>) {
          double r2 = 0.0;
          for (std::size_t a = 0; a < q.size(); ++a) {
            const double dx = q[a] - axis_center(p.center, static_cast<int>(a));
            r2 += dx * dx;
          }
          return 0.5 * params.mass * p.omega * p.omega * r2;
        } else if constexpr (std::is_same_v<T, BarrierPotential>) {
          for (std::size_t a = 0; a < q.size(); ++a) {
            const double dx = q[a] - axis_center(p.center, static_cast<int>(a));
            if (std::abs(dx) > p.half_width) return 0.0;
          }
          return p.height;
        } else {
          return sampled_interpolate(p, q);
        }
      },
      pot);
}

std::vector<double> sample_potential(const PotentialSpec& pot,
                                     const Grid& grid,
                                     const PhysicsParams& params) {
  validate_potential(pot, grid);
  const std::size_t n = grid.total_points();
  std::vector<double> values(n);

  if (const auto* sp = std::get_if<SampledPotential>(&pot)) {
    return sp->values;
  }

  std::vector<double> q(static_cast<std::size_t>(grid.dim()));
  for (std::size_t i = 0; i < n; ++i) {
    for (int a = 0; a < grid.dim(); ++a)
      q[static_cast<std::size_t>(a)] = grid.coordinate(a, grid.index_on_axis(i, a));
    values[i] = potential_value(pot, q, params);
  }
  return values;
}

std::vector<double> potential_gradient(const PotentialSpec& pot,
                                       std::span<const double> q,
                                       const PhysicsParams& params) {
  const std::size_t d = q.size();
  std::vector<double> grad(d, 0.0);
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, HarmonicPotential>) {
          for (std::size_t a = 0; a < d; ++a)
            grad[a] = params.mass * p.omega * p.omega *
                      (q[a] - axis_center(p.center, static_cast<int>(a)));
        } else if constexpr (std::is_same_v<T, SampledPotential>) {
          std::vector<double> qp(q.begin(), q.end());
          for (std::size_t a = 0; a < d; ++a) {
            const double h = p.grid.axis(static_cast<int>(a)).spacing();
            qp[a] = q[a] + h;
            const double vplus = sampled_interpolate(p, qp);
            qp[a] = q[a] - h;
            const double vminus = sampled_interpolate(p, qp);
            qp[a] = q[a];
            grad[a] = (vplus - vminus) / (2.0 * h);
          }
        }
        // Free and Barrier: zero gradient (the barrier edge is a step).
      },
      pot);
  return grad;
}

}  // namespace ncq
