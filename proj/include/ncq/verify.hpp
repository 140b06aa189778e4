#pragma once

#include <string>
#include <vector>

#include "ncq/params.hpp"

namespace ncq {

struct VerifyCheck {
  std::string name;
  double measured = 0.0;
  double bound_low = 0.0;   // pass iff bound_low <= measured <= bound_high
  double bound_high = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  std::vector<double> epsilons = {1e-1, 1e-2, 1e-3};
  double delta = 1e-2;
  // Test hook: scales the closed-form fourth moment used as reference.
  // Anything != 1 must make the suite fail.
  double moment4_scale = 1.0;
};

// Runs the chirp-moment consistency suite (quadrature vs closed forms at
// complex epsilon, delta -> 0 Richardson limit against the real-epsilon
// closed forms) and the generator-defect suite on the reference Gaussian.
// Throws on precondition violations (e.g. k*eps/m out of range); returns
// the full check table otherwise.
std::vector<VerifyCheck> run_verification(const VerifyOptions& options);

}  // namespace ncq
