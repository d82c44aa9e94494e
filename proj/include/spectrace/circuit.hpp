#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "spectrace/rng.hpp"

namespace spectrace {

enum class GateKind { I, H, X, Z, S, T, CNOT, CZ, CCSIGN, RZ, RAW, DIAG };

std::string gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

struct Gate {
  GateKind kind = GateKind::I;
  std::vector<int> targets;
  double angle = 0.0;              // RZ only
  Eigen::MatrixXcd raw;            // RAW only, 2^k x 2^k unitary
  std::vector<int> diag_signs;     // DIAG only, +-1, length 2^k

  static Gate identity(int q);
  static Gate h(int q);
  static Gate x(int q);
  static Gate z(int q);
  static Gate s(int q);
  static Gate t(int q);
  static Gate rz(int q, double angle);
  static Gate cnot(int control, int target);
  static Gate cz(int q0, int q1);
  static Gate ccsign(int q0, int q1, int q2);
  static Gate raw_gate(std::vector<int> targets, Eigen::MatrixXcd matrix);
  static Gate diag_gate(std::vector<int> targets, std::vector<int> signs);

  int arity() const { return static_cast<int>(targets.size()); }
  bool is_diagonal() const { return kind == GateKind::Z || kind == GateKind::S ||
                                    kind == GateKind::T || kind == GateKind::CZ ||
                                    kind == GateKind::CCSIGN || kind == GateKind::RZ ||
                                    kind == GateKind::DIAG || kind == GateKind::I; }
  // Local 2^k x 2^k matrix; targets[0] indexes the least significant local bit.
  Eigen::MatrixXcd matrix() const;
};

// Gate list in application order: U = U_m ... U_2 U_1 with U_1 = gates[0].
struct Circuit {
  int n_qubits = 1;
  std::vector<Gate> gates;

  Circuit() = default;
  Circuit(int n, std::vector<Gate> gs = {}) : n_qubits(n), gates(std::move(gs)) { validate(); }

  // Targets in range and distinct; RAW blocks unitary to 1e-10; dense
  // (non-diagonal) gates capped at max(3, ceil(log2 n)) qubits.
  void validate() const;
  int gate_count() const { return static_cast<int>(gates.size()); }
};

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

// Uniform random circuit over the named 1- and 2-qubit kinds; deterministic
// in (n_qubits, n_gates, seed).
Circuit random_circuit(int n_qubits, int n_gates, std::uint64_t seed);

}  // namespace spectrace
