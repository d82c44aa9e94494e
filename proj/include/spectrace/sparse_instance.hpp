#pragma once

#include "spectrace/bundle.hpp"
#include "spectrace/forrelation.hpp"

namespace spectrace {

// Three-oracle query circuit with every Hadamard wall split into ell blocks
// of H^{\otimes r}: the clock Hamiltonian built on it is 2^{r+1}-sparse.
struct SparseHamiltonianSpec {
  int r = 1;    // sparsity exponent: each H-factor is 2^r-sparse
  int ell = 1;  // factors per wall; n = r * ell
  OracleString x1, x2, x3;
};

struct SparsityReport {
  int measured_sparsity = 0;     // max nonzeros per row of the dense A
  int sparsity_bound = 0;        // 2^{r+1}
  int factor_count = 0;          // 3*ell + 3 before padding
  int clock_bits = 0;            // ceil(log2 m)
  int dense_gate_arity = 0;      // r
  bool diagonal_is_zero = false; // the inverse problem landed on a = 0
};

// Builds the 3ell+3 factor circuit for the given oracles, requires
// n = r * ell and 3ell + 3 <= approximate degree of f at eps, then assembles
// the full reduction bundle and scans the materialized A.
std::pair<ReductionBundle, SparsityReport> build_sparse_instance(
    const SparseHamiltonianSpec& spec, const TargetFunction& f, double eps, int n,
    const RemezOptions& ropts = {}, const InverseOptions& iopts = {});

// The factor circuit alone (exposed for tests).
Circuit sparse_query_circuit(const SparseHamiltonianSpec& spec, int n);

}  // namespace spectrace
