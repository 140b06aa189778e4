#include "ncq/wavefunction.hpp"

#include <cmath>
#include <complex>

#include "ncq/kernels.hpp"

namespace ncq {

void Wavefunction::validate() const {
  if (amps.size() != grid.total_points())
    fail(ErrKind::invalid_argument, "wavefunction size does not match grid");
  for (const std::complex<double>& z : amps)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      fail(ErrKind::numerical, "wavefunction contains non-finite amplitudes");
}

Wavefunction init_gaussian(const Grid& grid, const PhysicsParams& params,
                           std::span<const double> center, double sigma,
                           std::span<const double> momentum) {
  params.validate();
  if (grid.dim() != params.dim)
    fail(ErrKind::invalid_argument, "grid dimension does not match params.dim");
  if (center.size() != static_cast<std::size_t>(grid.dim()) ||
      momentum.size() != static_cast<std::size_t>(grid.dim()))
    fail(ErrKind::invalid_argument, "center/momentum need one entry per axis");
  if (!(sigma > 0.0)) fail(ErrKind::invalid_argument, "sigma must be > 0");

  for (int a = 0; a < grid.dim(); ++a) {
    const Axis& ax = grid.axis(a);
    if (sigma < 3.0 * ax.spacing())
      fail(ErrKind::invalid_argument,
           "packet too narrow: sigma < 3 grid spacings on axis " +
               std::to_string(a));
    if (center[a] - 5.0 * sigma < ax.x_min || center[a] + 5.0 * sigma > ax.x_max)
      fail(ErrKind::invalid_argument,
           "packet out of domain: center +- 5 sigma leaves axis " +
               std::to_string(a));
  }

  Wavefunction psi;
  psi.grid = grid;
  psi.time = 0.0;
  psi.amps.resize(grid.total_points());

  const double inv_four_sigma2 = 1.0 / (4.0 * sigma * sigma);
  for (std::size_t i = 0; i < psi.amps.size(); ++i) {
    double exponent = 0.0;
    double phase = 0.0;
    for (int a = 0; a < grid.dim(); ++a) {
      const double x = grid.coordinate(a, grid.index_on_axis(i, a));
      const double dx = x - center[a];
      exponent -= dx * dx * inv_four_sigma2;
      phase += momentum[a] * x / params.hbar;
    }
    psi.amps[i] = std::exp(exponent) * std::polar(1.0, phase);
  }

  const double norm = grid.cell_volume() * kernels::norm_sq(psi.amps);
  kernels::scale(psi.amps, 1.0 / std::sqrt(norm));
  return psi;
}

}  // namespace ncq
