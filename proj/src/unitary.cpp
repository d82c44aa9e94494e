#include "spectrace/unitary.hpp"

#include <algorithm>
#include <cmath>

#include "spectrace/errors.hpp"

namespace spectrace {

using cplx = std::complex<double>;

namespace {

void apply_gate_impl(const Gate& g, Eigen::Ref<Eigen::VectorXcd> state, int n_qubits,
                     bool adjoint) {
  const long N = state.size();
  const int k = g.arity();

  if (g.is_diagonal()) {
    // Diagonal kinds: one multiply per amplitude.
    Eigen::VectorXcd d(1L << k);
    if (g.kind == GateKind::DIAG) {
      for (long i = 0; i < d.size(); ++i) d[i] = g.diag_signs[i];
    } else {
      Eigen::MatrixXcd m = g.matrix();
      for (long i = 0; i < d.size(); ++i) d[i] = m(i, i);
    }
    if (adjoint) d = d.conjugate();
    for (long idx = 0; idx < N; ++idx) {
      long loc = 0;
      for (int j = 0; j < k; ++j) loc |= ((idx >> g.targets[j]) & 1L) << j;
      state[idx] *= d[loc];
    }
    return;
  }

  Eigen::MatrixXcd m = g.matrix();
  if (adjoint) m = m.adjoint().eval();
  const long K = 1L << k;
  // Iterate over all index patterns with the target bits cleared.
  long tmask = 0;
  for (int j = 0; j < k; ++j) tmask |= 1L << g.targets[j];
  std::vector<long> offs(K, 0);
  for (long loc = 0; loc < K; ++loc) {
    long off = 0;
    for (int j = 0; j < k; ++j)
      if ((loc >> j) & 1) off |= 1L << g.targets[j];
    offs[loc] = off;
  }
  Eigen::VectorXcd buf(K);
  for (long base = 0; base < N; ++base) {
    if (base & tmask) continue;
    for (long loc = 0; loc < K; ++loc) buf[loc] = state[base | offs[loc]];
    for (long loc = 0; loc < K; ++loc) {
      cplx acc = 0;
      for (long j = 0; j < K; ++j) acc += m(loc, j) * buf[j];
      state[base | offs[loc]] = acc;
    }
  }
  (void)n_qubits;
}

}  // namespace

void apply_gate(const Gate& g, Eigen::Ref<Eigen::VectorXcd> state, int n_qubits) {
  apply_gate_impl(g, state, n_qubits, false);
}

void apply_gate_adjoint(const Gate& g, Eigen::Ref<Eigen::VectorXcd> state, int n_qubits) {
  apply_gate_impl(g, state, n_qubits, true);
}

void apply_circuit(const Circuit& c, Eigen::Ref<Eigen::VectorXcd> state) {
  for (const Gate& g : c.gates) apply_gate(g, state, c.n_qubits);
}

Eigen::MatrixXcd materialize(const Circuit& c) {
  if (c.n_qubits > 12) throw TooLargeError("materialize: n_qubits > 12");
  const long N = 1L << c.n_qubits;
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(N, N);
  for (long col = 0; col < N; ++col) {
    Eigen::VectorXcd v = U.col(col);
    apply_circuit(c, v);
    U.col(col) = v;
  }
  return U;
}

double unitarity_residual(const Eigen::MatrixXcd& U) {
  return (U * U.adjoint() - Eigen::MatrixXcd::Identity(U.rows(), U.cols())).cwiseAbs().maxCoeff();
}

std::complex<double> normalized_trace(const Eigen::MatrixXcd& U) {
  return U.trace() / static_cast<double>(U.rows());
}

std::vector<Eigenphase> eigenphases(const Eigen::MatrixXcd& U) {
  if (unitarity_residual(U) > 1e-8)
    throw NotUnitaryError("matrix fails the unitarity residual bound");
  // Schur of a normal matrix: Q is orthonormal and T is diagonal to roundoff,
  // so the Schur basis already meets the eigenpair residual contract.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(U, true);
  const long N = U.rows();
  std::vector<Eigenphase> out(N);
  std::vector<long> order(N);
  for (long i = 0; i < N; ++i) order[i] = i;
  std::vector<double> thetas(N);
  for (long i = 0; i < N; ++i) {
    double th = std::arg(schur.matrixT()(i, i));
    if (th < 0) th += 2 * M_PI;
    if (th >= 2 * M_PI) th -= 2 * M_PI;
    thetas[i] = th;
  }
  std::sort(order.begin(), order.end(), [&](long a, long b) { return thetas[a] < thetas[b]; });
  for (long i = 0; i < N; ++i) {
    out[i].theta = thetas[order[i]];
    out[i].vec = schur.matrixU().col(order[i]);
  }
  return out;
}

}  // namespace spectrace
