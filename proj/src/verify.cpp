#include "ncq/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>

#include "ncq/pathintegral.hpp"
#include "ncq/wavefunction.hpp"

namespace ncq {

namespace {

using cplx = std::complex<double>;

std::string eps_tag(double eps) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", eps);
  return buf;
}

VerifyCheck relative_check(std::string name, double measured, double bound) {
  VerifyCheck c{std::move(name), measured, 0.0, bound, false};
  c.pass = std::isfinite(measured) && measured <= bound;
  return c;
}

VerifyCheck window_check(std::string name, double measured, double lo,
                         double hi) {
  VerifyCheck c{std::move(name), measured, lo, hi, false};
  c.pass = std::isfinite(measured) && measured >= lo && measured <= hi;
  return c;
}

// Reference state for the generator-defect suite: a sigma = 2 Gaussian on a
// 512-point [-20, 20) line in a unit harmonic trap with k = 0.05.
struct DefectSetup {
  PhysicsParams params;
  Wavefunction psi;
  PotentialSpec pot;

  DefectSetup() {
    params.friction_k = 0.05;
    const Grid grid = Grid::line(-20.0, 20.0, 512);
    const double center[1] = {0.0};
    const double momentum[1] = {0.0};
    psi = init_gaussian(grid, params, center, 2.0, momentum);
    pot = HarmonicPotential{1.0, {0.0}};
  }

  double defect(double eps) const {
    return generator_defect(psi, pot, params, eps);
  }
};

}  // namespace

std::vector<VerifyCheck> run_verification(const VerifyOptions& options) {
  PhysicsParams params;  // hbar = m = 1; the moment integrals carry no k
  std::vector<VerifyCheck> checks;

  const DefectSetup defect_setup;
  for (double eps : options.epsilons) {
    // Guard against epsilons outside the short-time expansion window for
    // the defect reference physics (throws, caller maps to exit 1).
    ShortTimeParams st{eps, options.delta, defect_setup.params};
    st.validate();
  }

  const int orders[4] = {0, 1, 2, 4};
  for (double eps : options.epsilons) {
    const cplx eps_c = eps * cplx(1.0, -options.delta);
    for (int order : orders) {
      cplx closed = kernel_moment_closed(order, eps_c, params);
      if (order == 4) closed *= options.moment4_scale;
      const cplx quad =
          kernel_moment_quadrature(order, eps, params, options.delta);
      const std::string name = "moment order " + std::to_string(order) +
                               ", eps = " + eps_tag(eps) +
                               (order == 1 ? " (abs)" : " (rel)");
      if (order == 1) {
        checks.push_back(relative_check(name, std::abs(quad), 1e-10));
      } else {
        checks.push_back(
            relative_check(name, std::abs(quad - closed) / std::abs(closed), 1e-8));
      }
    }

    // delta -> 0 limit: two Richardson eliminations on delta, delta/2,
    // delta/4 against the real-eps closed forms.
    for (int order : orders) {
      const cplx f1 =
          kernel_moment_quadrature(order, eps, params, options.delta);
      const cplx f2 =
          kernel_moment_quadrature(order, eps, params, options.delta / 2.0);
      const cplx f4 =
          kernel_moment_quadrature(order, eps, params, options.delta / 4.0);
      const cplx first = 2.0 * f2 - f1;
      const cplx second = 2.0 * f4 - f2;
      const cplx extrapolated = (4.0 * second - first) / 3.0;
      cplx closed = kernel_moment_closed(order, cplx(eps, 0.0), params);
      if (order == 4) closed *= options.moment4_scale;
      const std::string name = "Richardson delta->0, order " +
                               std::to_string(order) + ", eps = " + eps_tag(eps) +
                               (order == 1 ? " (abs)" : " (rel)");
      if (order == 1) {
        checks.push_back(relative_check(name, std::abs(extrapolated), 1e-10));
      } else {
        checks.push_back(relative_check(
            name, std::abs(extrapolated - closed) / std::abs(closed), 1e-4));
      }
    }
  }

  // Generator-defect suite on the reference Gaussian: first-order decay of
  // the defect under halving, plus the small-eps magnitude bound.
  for (double eps : {1e-2, 5e-3, 2.5e-3}) {
    const double ratio = defect_setup.defect(eps) / defect_setup.defect(eps / 2.0);
    checks.push_back(window_check(
        "defect ratio eps/(eps/2), eps = " + eps_tag(eps), ratio, 1.7, 2.3));
  }
  checks.push_back(
      relative_check("defect magnitude at eps = 0.001",
                     defect_setup.defect(1e-3), 1e-2));

  return checks;
}

}  // namespace ncq
