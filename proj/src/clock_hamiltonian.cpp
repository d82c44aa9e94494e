#include "spectrace/clock_hamiltonian.hpp"

#include <cmath>

#include "spectrace/errors.hpp"
#include "spectrace/unitary.hpp"

namespace spectrace {

ClockHamiltonian::ClockHamiltonian(Circuit circuit, Eigen::VectorXd a, Eigen::VectorXd b)
    : circuit_(std::move(circuit)), a_(std::move(a)), b_(std::move(b)) {
  const int m = circuit_.gate_count();
  if (m < 3) throw Error(ErrorKind::Precondition, "clock Hamiltonian needs >= 3 gates");
  if (a_.size() != m || b_.size() != m)
    throw DimensionMismatchError("coefficient count must equal the gate count");
  for (int i = 0; i < m; ++i)
    if (!(b_[i] > 0.0)) throw NonPositiveCouplingError("b[" + std::to_string(i) + "] <= 0");
}

ClockHamiltonian build_hamiltonian(Circuit c, Eigen::VectorXd a, Eigen::VectorXd b) {
  return ClockHamiltonian(std::move(c), std::move(a), std::move(b));
}

Eigen::MatrixXcd ClockHamiltonian::dense() const {
  if (dim() > (1L << 14)) throw TooLargeError("clock Hamiltonian dense(): dim > 2^14");
  const int m = clock_dim();
  const long Q = 1L << n_qubits();
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(dim(), dim());
  for (int c = 0; c < m; ++c)
    for (long q = 0; q < Q; ++q) A(c * Q + q, c * Q + q) = a_[c];
  // Hopping term t couples clock t-1 -> t mod m through gate U_t.
  for (int t = 1; t <= m; ++t) {
    Eigen::MatrixXcd Ut = Eigen::MatrixXcd::Identity(Q, Q);
    for (long col = 0; col < Q; ++col) {
      Eigen::VectorXcd v = Ut.col(col);
      apply_gate(circuit_.gates[t - 1], v, n_qubits());
      Ut.col(col) = v;
    }
    int row = t % m, col = t - 1;
    A.block(row * Q, col * Q, Q, Q) += b_[t - 1] * Ut;
    A.block(col * Q, row * Q, Q, Q) += b_[t - 1] * Ut.adjoint();
  }
  return A;
}

void ClockHamiltonian::apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const {
  const int m = clock_dim();
  const long Q = 1L << n_qubits();
  if (x.size() != dim()) throw DimensionMismatchError("apply: vector has wrong dimension");
  y.setZero(dim());
  for (int c = 0; c < m; ++c) y.segment(c * Q, Q) = a_[c] * x.segment(c * Q, Q);
  Eigen::VectorXcd buf(Q);
  for (int t = 1; t <= m; ++t) {
    int row = t % m, col = t - 1;
    // b_t U_t acting out of clock col into clock row, and its adjoint back.
    buf = x.segment(col * Q, Q);
    apply_gate(circuit_.gates[t - 1], buf, n_qubits());
    y.segment(row * Q, Q) += b_[t - 1] * buf;
    buf = x.segment(row * Q, Q);
    apply_gate_adjoint(circuit_.gates[t - 1], buf, n_qubits());
    y.segment(col * Q, Q) += b_[t - 1] * buf;
  }
}

std::vector<std::pair<double, PeriodicJacobi>> ClockHamiltonian::block_decompose() const {
  if (n_qubits() > 10) throw TooLargeError("block_decompose: n_qubits > 10");
  Eigen::MatrixXcd U = materialize(circuit_);
  std::vector<Eigenphase> phases = eigenphases(U);
  std::vector<std::pair<double, PeriodicJacobi>> out;
  out.reserve(phases.size());
  for (const Eigenphase& p : phases)
    out.emplace_back(p.theta, PeriodicJacobi(a_, b_, p.theta));
  return out;
}

ClockHamiltonian::Locality ClockHamiltonian::locality() const {
  Locality loc;
  loc.clock_bits = static_cast<int>(std::ceil(std::log2(std::max(2, clock_dim()))));
  // DIAG oracles are black-box diagonal layers; locality accounting covers
  // the dense gates.
  for (const Gate& g : circuit_.gates)
    if (g.kind != GateKind::DIAG) loc.max_gate_arity = std::max(loc.max_gate_arity, g.arity());
  loc.term_locality_binary = loc.clock_bits + loc.max_gate_arity;
  return loc;
}

namespace {

double apply_f_checked(const TargetFunction& f, double lambda) {
  const Domain& dom = f.domain();
  if (dom.contains(lambda)) return f(lambda);
  double dist = dom.distance(lambda);
  if (dist <= 1e-8) return f(dom.clamp(lambda));
  throw DomainViolationError("eigenvalue " + std::to_string(lambda) + " lies " +
                             std::to_string(dist) + " outside the target domain");
}

}  // namespace

double trace_poly_block(const PeriodicJacobi& J, const ChebPoly& P) {
  Eigen::VectorXd ev = J.eigenvalues();
  double acc = 0.0;
  for (int i = 0; i < ev.size(); ++i) acc += P(ev[i]);
  return acc;
}

double trace_f(const ClockHamiltonian& H, const TargetFunction& f, TracePath path) {
  if (path == TracePath::Dense) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H.dense(), Eigen::EigenvaluesOnly);
    double acc = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      acc += apply_f_checked(f, es.eigenvalues()[i]);
    return acc;
  }
  double acc = 0.0;
  for (const auto& [theta, block] : H.block_decompose()) {
    Eigen::VectorXd ev = block.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) acc += apply_f_checked(f, ev[i]);
  }
  return acc;
}

ThetaSpread theta_independence_check(const ClockHamiltonian& H, const ChebPoly& P) {
  ThetaSpread out;
  out.degree_too_high = P.degree(1e-12) >= H.clock_dim();
  double lo = 0.0, hi = 0.0;
  for (int j = 0; j < 8; ++j) {
    double theta = 2.0 * M_PI * j / 8.0;
    double v = trace_poly_block(PeriodicJacobi(H.a(), H.b(), theta), P);
    if (j == 0) {
      out.value = v;
      lo = hi = v;
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  out.spread = hi - lo;
  return out;
}

}  // namespace spectrace
