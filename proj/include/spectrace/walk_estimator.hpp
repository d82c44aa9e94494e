#pragma once

#include <cstdint>
#include <vector>

#include "spectrace/chebyshev.hpp"
#include "spectrace/sparse_oracle.hpp"

namespace spectrace {

struct WalkEstimate {
  double value = 0.0;
  double std_error = 0.0;
  long samples = 0;
  std::uint64_t queries_used = 0;
  double queries_per_sample = 0.0;
};

// Unbiased estimator of (1/D) tr P(A): draw uniform diagonal indices and
// compute [P(A)]_{ii} exactly by depth-(deg P) neighborhood expansion through
// the oracles.  Rows are memoized within one sample, so each distinct row
// costs 2s queries at most once per sample.  Deterministic in the seed.
WalkEstimate walk_trace_poly(SparseOracle& oracle, const ChebPoly& P, long samples,
                             std::uint64_t seed);

// Oracle cost of one definitional depth-k expansion of [A^k]_{ii}: every path
// is expanded without row reuse, 2s(s^k - 1)/(s - 1) calls.  This is the
// baseline whose growth the scaling report tabulates.
double definitional_diag_power(SparseOracle& oracle, long i, int k);

struct ScalingRow {
  int s = 0;
  int k = 0;
  long D = 0;
  long samples = 0;
  double mean = 0.0;
  double stderr_ = 0.0;
  double queries_per_sample = 0.0;
};

// Per-sample query counts of the definitional estimator on deterministic
// s-regular circulant matrices, over the requested (s, k) grid.
std::vector<ScalingRow> query_scaling_report(const std::vector<int>& s_values,
                                             const std::vector<int>& k_values, long D = 1024,
                                             long samples = 4, std::uint64_t seed = 7);

// s-regular circulant test matrix (neighbors at offsets +-1..+-s/2), entries
// 1/s so the spectrum stays inside [-1, 1]; s must be even or 1.
Eigen::MatrixXcd circulant_matrix(long D, int s);

}  // namespace spectrace
