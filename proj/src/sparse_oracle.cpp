#include "spectrace/sparse_oracle.hpp"

#include "spectrace/errors.hpp"

namespace spectrace {

SparseOracle::SparseOracle(const Eigen::MatrixXcd& A) : dim_(A.rows()) {
  double herm = (A - A.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-10) throw NotHermitianError("residual " + std::to_string(herm));
  double floor = 1e-14 * std::max(1.0, A.cwiseAbs().maxCoeff());
  cols_.resize(dim_);
  vals_.resize(dim_);
  for (long i = 0; i < dim_; ++i) {
    for (long j = 0; j < A.cols(); ++j) {
      if (std::abs(A(i, j)) > floor) {
        cols_[i].push_back(j);
        vals_[i].push_back(A(i, j));
      }
    }
    sparsity_ = std::max(sparsity_, static_cast<int>(cols_[i].size()));
  }
}

std::complex<double> SparseOracle::entry(long i, long j) const {
  ++entry_queries_;
  const std::vector<long>& row = cols_[i];
  for (size_t k = 0; k < row.size(); ++k)
    if (row[k] == j) return vals_[i][k];
  return {0.0, 0.0};
}

long SparseOracle::position(long i, int j) const {
  ++position_queries_;
  if (j < 0 || j >= static_cast<int>(cols_[i].size())) return -1;
  return cols_[i][j];
}

SparseOracle wrap_dense(const Eigen::MatrixXcd& A) { return SparseOracle(A); }

}  // namespace spectrace
