#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace spectrace {

// Query-counted sparse access to a Hermitian matrix: an entry oracle
// (i, j) -> A_ij and a position oracle (i, j) -> column of the j-th nonzero
// in row i (j < s), or -1 past the row's end.  Counters tick on every call;
// any caching has to live above this interface.
class SparseOracle {
 public:
  explicit SparseOracle(const Eigen::MatrixXcd& A);

  long dim() const { return dim_; }
  int sparsity() const { return sparsity_; }

  std::complex<double> entry(long i, long j) const;
  long position(long i, int j) const;

  std::uint64_t entry_queries() const { return entry_queries_; }
  std::uint64_t position_queries() const { return position_queries_; }
  std::uint64_t total_queries() const { return entry_queries_ + position_queries_; }

 private:
  long dim_ = 0;
  int sparsity_ = 0;
  std::vector<std::vector<long>> cols_;
  std::vector<std::vector<std::complex<double>>> vals_;
  mutable std::uint64_t entry_queries_ = 0;
  mutable std::uint64_t position_queries_ = 0;
};

// Hermiticity-checked wrap (residual <= 1e-10) into compressed rows; the
// sparsity is the max nonzero count over rows.
SparseOracle wrap_dense(const Eigen::MatrixXcd& A);

}  // namespace spectrace
