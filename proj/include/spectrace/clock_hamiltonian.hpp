#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "spectrace/chebyshev.hpp"
#include "spectrace/circuit.hpp"
#include "spectrace/periodic_jacobi.hpp"
#include "spectrace/target_function.hpp"

namespace spectrace {

// A = sum_t a_t |t-1><t-1| x I + sum_t b_t (|t mod m><t-1| x U_t + h.c.),
// t = 1..m, so the invariant block at circuit eigenphase theta is exactly the
// periodic Jacobi matrix with diagonal a, couplings b and corner phase theta.
class ClockHamiltonian {
 public:
  ClockHamiltonian() = default;
  // m = gate count = |a| = |b| >= 3; all b > 0.
  ClockHamiltonian(Circuit circuit, Eigen::VectorXd a, Eigen::VectorXd b);

  const Circuit& circuit() const { return circuit_; }
  const Eigen::VectorXd& a() const { return a_; }
  const Eigen::VectorXd& b() const { return b_; }
  int clock_dim() const { return static_cast<int>(a_.size()); }
  int n_qubits() const { return circuit_.n_qubits; }
  long dim() const { return static_cast<long>(clock_dim()) << n_qubits(); }

  // Dense Hermitian matrix, clock-major indexing (row = c * 2^n + q).
  // Requires dim <= 2^14.
  Eigen::MatrixXcd dense() const;
  // y = A x without materializing A.
  void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;

  // One periodic Jacobi block per circuit eigenphase (with multiplicity).
  std::vector<std::pair<double, PeriodicJacobi>> block_decompose() const;

  struct Locality {
    int clock_bits = 0;          // ceil(log2 m): clock support, binary encoding
    int clock_support_unary = 2; // a unary-encoded hopping term touches 2 slots
    int max_gate_arity = 0;      // widest non-diagonal gate in the circuit
    int term_locality_binary = 0;  // clock_bits + max_gate_arity
  };
  Locality locality() const;

 private:
  Circuit circuit_;
  Eigen::VectorXd a_, b_;
};

ClockHamiltonian build_hamiltonian(Circuit c, Eigen::VectorXd a, Eigen::VectorXd b);

enum class TracePath { Dense, Blocks };

// tr f(A): dense eigensolve, or the sum of per-phase block traces.  Every
// eigenvalue must sit in f's domain (1e-8 clamp tolerance, DomainViolation
// beyond that).
double trace_f(const ClockHamiltonian& H, const TargetFunction& f, TracePath path);

struct ThetaSpread {
  double spread = 0.0;   // max - min of tr P(A_theta) over 8 phases
  double value = 0.0;    // tr P(A_0)
  bool degree_too_high = false;  // deg P >= m: spread is expected to be nonzero
};

ThetaSpread theta_independence_check(const ClockHamiltonian& H, const ChebPoly& P);

// tr P(J at theta) by direct eigensolve of the m x m block.
double trace_poly_block(const PeriodicJacobi& J, const ChebPoly& P);

}  // namespace spectrace
