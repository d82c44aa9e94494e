#pragma once

#include <string>

#include "spectrace/clock_hamiltonian.hpp"
#include "spectrace/jacobi_inverse.hpp"
#include "spectrace/reduction_discriminant.hpp"

namespace spectrace {

// Everything the circuit-to-Hamiltonian construction produces for one
// (f, eps, circuit) triple.  m = d after identity padding.
struct ReductionBundle {
  TargetFunction f;
  double epsilon = 0.0;
  int d = 0;
  double E_d = 0.0, E_dm1 = 0.0, eta = 0.0, eta_prime = 0.0;
  int sign = 1;  // leading-coefficient normalization of the discriminant
  Discriminant disc;
  ChebPoly p_star;  // P*_{d-1}
  PeriodicJacobi jacobi;
  ClockHamiltonian hamiltonian;
  int padded_gates = 0;
};

// Pads the circuit with identity gates to exactly d = approximate degree
// gates, then runs the discriminant construction, the inverse problem and the
// Hamiltonian assembly.
ReductionBundle assemble_reduction(const TargetFunction& f, double eps, const Circuit& c,
                                   const RemezOptions& ropts = {},
                                   const InverseOptions& iopts = {});

struct Error2Verdict {
  double lhs = 0.0;        // tr f(A) / (m 2^n)
  double predicted = 0.0;  // (E_{d-1} - eta) sign Re tr U / 2^n + tr P*(A_0) / m
  double bound = 0.0;      // (E_{d-1} - eta) eta' + 1e-7
  bool pass = false;
};

Error2Verdict verify_error2(const ReductionBundle& bundle);

std::string bundle_to_json(const ReductionBundle& bundle);

}  // namespace spectrace
