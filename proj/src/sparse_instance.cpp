#include "spectrace/sparse_instance.hpp"

#include <cmath>

#include "spectrace/errors.hpp"

namespace spectrace {

Circuit sparse_query_circuit(const SparseHamiltonianSpec& spec, int n) {
  if (spec.r < 1 || spec.ell < 1)
    throw Error(ErrorKind::InvalidInput, "sparse instance: r and ell must be >= 1");
  if (n != spec.r * spec.ell)
    throw FactorMismatchError("n = " + std::to_string(n) + " != r * ell = " +
                              std::to_string(spec.r * spec.ell));
  for (const OracleString* o : {&spec.x1, &spec.x2, &spec.x3})
    if (o->signs.size() != (1ull << n)) throw LengthMismatchError("oracle length != 2^n");

  Circuit c(n);
  auto push_wall = [&]() {
    for (int j = 0; j < spec.ell; ++j) {
      if (spec.r == 1) {
        c.gates.push_back(Gate::h(j));
      } else {
        std::vector<int> targets(spec.r);
        for (int q = 0; q < spec.r; ++q) targets[q] = j * spec.r + q;
        Eigen::MatrixXcd Hr = hadamard_layer(spec.r).cast<std::complex<double>>();
        c.gates.push_back(Gate::raw_gate(std::move(targets), std::move(Hr)));
      }
    }
  };
  auto push_oracle = [&](const OracleString& o) {
    std::vector<int> targets(n);
    for (int q = 0; q < n; ++q) targets[q] = q;
    c.gates.push_back(Gate::diag_gate(std::move(targets), o.signs));
  };
  // U = O_{x1} H^n O_{x2} H^n O_{x3} H^n, stored first-applied-first.
  push_wall();
  push_oracle(spec.x3);
  push_wall();
  push_oracle(spec.x2);
  push_wall();
  push_oracle(spec.x1);
  c.validate();
  return c;
}

std::pair<ReductionBundle, SparsityReport> build_sparse_instance(
    const SparseHamiltonianSpec& spec, const TargetFunction& f, double eps, int n,
    const RemezOptions& ropts, const InverseOptions& iopts) {
  Circuit c = sparse_query_circuit(spec, n);
  ReductionBundle bundle = assemble_reduction(f, eps, c, ropts, iopts);

  SparsityReport rep;
  rep.sparsity_bound = 1 << (spec.r + 1);
  rep.factor_count = 3 * spec.ell + 3;
  rep.clock_bits =
      static_cast<int>(std::ceil(std::log2(std::max(2, bundle.hamiltonian.clock_dim()))));
  rep.dense_gate_arity = spec.r;
  rep.diagonal_is_zero = bundle.jacobi.a.cwiseAbs().maxCoeff() == 0.0;

  Eigen::MatrixXcd A = bundle.hamiltonian.dense();
  double floor = 1e-12 * A.cwiseAbs().maxCoeff();
  int worst = 0;
  for (long i = 0; i < A.rows(); ++i) {
    int nnz = 0;
    for (long j = 0; j < A.cols(); ++j)
      if (std::abs(A(i, j)) > floor) nnz++;
    worst = std::max(worst, nnz);
  }
  rep.measured_sparsity = worst;
  return {std::move(bundle), rep};
}

}  // namespace spectrace
