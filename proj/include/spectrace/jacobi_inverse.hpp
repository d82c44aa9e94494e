#pragma once

#include <cstdint>

#include "spectrace/periodic_jacobi.hpp"

namespace spectrace {

struct InverseOptions {
  int max_restarts = 32;
  int max_iters = 250;
  // Converged when the sup-norm of the scaled coefficient residual drops
  // below this; the roundtrip contract is 1e-7 relative.
  double residual_tol = 1e-10;
  std::uint64_t seed = 0x5eed;
};

// Construct a PeriodicJacobi (theta = 0) whose discriminant matches the
// target to within the roundtrip contract.  Damped Gauss-Newton on the
// Chebyshev coefficient residual with unknowns (a, log b); the isospectral
// slack is handled by minimum-norm steps.  Any member of the isospectral
// family is an acceptable answer.
PeriodicJacobi jacobi_from_discriminant(const Discriminant& target,
                                        const InverseOptions& opts = {});

}  // namespace spectrace
