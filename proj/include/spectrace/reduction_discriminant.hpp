#pragma once

#include "spectrace/periodic_jacobi.hpp"
#include "spectrace/remez.hpp"

namespace spectrace {

// Discriminant carved out of the best-approximation ladder at accuracy eps:
//   Delta = sign(lead P*_d) * (P*_d - P*_{d-1}) / (E_{d-1} - eta),  eta = E_d.
// Passes both inversion validity conditions, and on the domain
//   | Delta - sign * (f - P*_{d-1}) / (E_{d-1} - eta) | <= eta' = eta / (E_{d-1} - eta).
struct ReductionDiscriminant {
  Discriminant disc;
  ChebPoly p_star;  // P*_{d-1}
  int d = 0;
  double E_d = 0.0;
  double E_dm1 = 0.0;
  double eta = 0.0;
  double eta_prime = 0.0;
  int sign = 1;  // sign of the leading coefficient of P*_d
  MinimaxResult minimax_d;
  MinimaxResult minimax_dm1;
};

ReductionDiscriminant build_reduction_discriminant(const TargetFunction& f, double eps,
                                                   const RemezOptions& opts = {});

}  // namespace spectrace
