#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spectrace/circuit.hpp"

namespace spectrace {

// In-place gate application to a statevector, little-endian (qubit 0 = least
// significant bit of the index).
void apply_gate(const Gate& g, Eigen::Ref<Eigen::VectorXcd> state, int n_qubits);

// Apply the adjoint of the gate.
void apply_gate_adjoint(const Gate& g, Eigen::Ref<Eigen::VectorXcd> state, int n_qubits);

// Apply the whole circuit, gates[0] first.
void apply_circuit(const Circuit& c, Eigen::Ref<Eigen::VectorXcd> state);

// Dense unitary of the circuit; n_qubits <= 12.
Eigen::MatrixXcd materialize(const Circuit& c);

double unitarity_residual(const Eigen::MatrixXcd& U);

// (1/2^n) tr U.
std::complex<double> normalized_trace(const Eigen::MatrixXcd& U);

struct Eigenphase {
  double theta = 0.0;  // in [0, 2pi)
  Eigen::VectorXcd vec;
};

// Full eigensystem of a unitary: orthonormal vectors with U v = e^{i theta} v,
// sorted by phase, multiplicities preserved.
std::vector<Eigenphase> eigenphases(const Eigen::MatrixXcd& U);

}  // namespace spectrace
