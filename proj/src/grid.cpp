#include "ncq/grid.hpp"

#include <numbers>

namespace ncq {

Grid::Grid(std::vector<Axis> axes) : axes_(std::move(axes)) {
  if (axes_.empty() || axes_.size() > 3)
    fail(ErrKind::invalid_argument, "grid needs 1 to 3 axes");
  total_ = 1;
  for (const Axis& ax : axes_) {
    if (ax.n_points < 8)
      fail(ErrKind::invalid_argument, "grid needs at least 8 points per axis");
    if (!(ax.x_max > ax.x_min))
      fail(ErrKind::invalid_argument, "grid axis needs x_max > x_min");
    total_ *= static_cast<std::size_t>(ax.n_points);
  }
}

double Grid::cell_volume() const {
  double vol = 1.0;
  for (const Axis& ax : axes_) vol *= ax.spacing();
  return vol;
}

double Grid::frequency(int a, int i) const {
  const Axis& ax = axes_[static_cast<std::size_t>(a)];
  const int n = ax.n_points;
  const int wrapped = (i < (n + 1) / 2) ? i : i - n;
  return 2.0 * std::numbers::pi * wrapped / ax.length();
}

int Grid::index_on_axis(std::size_t flat, int a) const {
  for (int b = 0; b < a; ++b)
    flat /= static_cast<std::size_t>(axes_[static_cast<std::size_t>(b)].n_points);
  return static_cast<int>(
      flat % static_cast<std::size_t>(axes_[static_cast<std::size_t>(a)].n_points));
}

}  // namespace ncq
