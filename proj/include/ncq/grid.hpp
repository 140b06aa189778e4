#pragma once

#include <cstddef>
#include <vector>

#include "ncq/errors.hpp"

namespace ncq {

struct Axis {
  double x_min = 0.0;
  double x_max = 0.0;
  int n_points = 0;

  double length() const { return x_max - x_min; }
  double spacing() const { return length() / n_points; }
  bool operator==(const Axis&) const = default;
};

// Uniform periodic lattice, 1 to 3 axes. Flat storage with axis 0 fastest:
// flat = i0 + n0*(i1 + n1*i2).
class Grid {
 public:
  Grid() = default;
  explicit Grid(std::vector<Axis> axes);
  static Grid line(double x_min, double x_max, int n_points) {
    return Grid({Axis{x_min, x_max, n_points}});
  }

  int dim() const { return static_cast<int>(axes_.size()); }
  const Axis& axis(int a) const { return axes_[static_cast<std::size_t>(a)]; }
  std::size_t total_points() const { return total_; }

  // Product of spacings: the discrete volume element.
  double cell_volume() const;

  double coordinate(int a, int i) const {
    const Axis& ax = axes_[static_cast<std::size_t>(a)];
    return ax.x_min + i * ax.spacing();
  }

  // Angular frequency of DFT bin i on axis a (negative half wrapped).
  double frequency(int a, int i) const;

  int index_on_axis(std::size_t flat, int a) const;

  bool operator==(const Grid&) const = default;

 private:
  std::vector<Axis> axes_;
  std::size_t total_ = 0;
};

}  // namespace ncq
