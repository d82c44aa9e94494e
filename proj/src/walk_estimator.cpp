#include "spectrace/walk_estimator.hpp"

#include <cmath>
#include <unordered_map>

#include "spectrace/errors.hpp"
#include "spectrace/rng.hpp"

namespace spectrace {

namespace {

using cplx = std::complex<double>;
using SparseVec = std::unordered_map<long, cplx>;

struct RowCache {
  SparseOracle& oracle;
  std::unordered_map<long, std::vector<std::pair<long, cplx>>> rows;

  const std::vector<std::pair<long, cplx>>& row(long i) {
    auto it = rows.find(i);
    if (it != rows.end()) return it->second;
    std::vector<std::pair<long, cplx>> r;
    for (int j = 0; j < oracle.sparsity(); ++j) {
      long col = oracle.position(i, j);
      if (col < 0) break;
      r.emplace_back(col, oracle.entry(i, col));
    }
    return rows.emplace(i, std::move(r)).first->second;
  }
};

// y = Atilde x with Atilde = alpha A + beta I, using Hermitian row access:
// A_{ci} = conj(A_{ic}).
SparseVec apply_affine(RowCache& cache, const SparseVec& x, double alpha, double beta) {
  SparseVec y;
  for (const auto& [i, v] : x) {
    y[i] += beta * v;
    for (const auto& [c, a_ic] : cache.row(i)) y[c] += alpha * std::conj(a_ic) * v;
  }
  return y;
}

}  // namespace

WalkEstimate walk_trace_poly(SparseOracle& oracle, const ChebPoly& P, long samples,
                             std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorKind::InvalidInput, "walk_trace_poly: samples >= 1");
  const std::vector<double>& c = P.coeffs();
  Interval ref = P.ref_interval();
  double alpha = 2.0 / ref.length();
  double beta = -(ref.lo + ref.hi) / ref.length();

  std::uint64_t q0 = oracle.total_queries();
  double sum = 0.0, sumsq = 0.0;
  CounterRng rng(seed, 0xa11);
  for (long s = 0; s < samples; ++s) {
    long i = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(oracle.dim())));
    RowCache cache{oracle, {}};
    // t_j = T_j(Atilde) e_i; diagonal entry accumulates sum_j c_j (t_j)_i.
    SparseVec t0{{i, cplx(1.0, 0.0)}};
    double acc = c[0];
    if (c.size() > 1) {
      SparseVec t1 = apply_affine(cache, t0, alpha, beta);
      auto at = [&](const SparseVec& v) {
        auto it = v.find(i);
        return it == v.end() ? 0.0 : it->second.real();
      };
      acc += c[1] * at(t1);
      for (size_t k = 2; k < c.size(); ++k) {
        SparseVec t2 = apply_affine(cache, t1, 2.0 * alpha, 2.0 * beta);
        for (const auto& [idx, v] : t0) t2[idx] -= v;
        acc += c[k] * at(t2);
        t0 = std::move(t1);
        t1 = std::move(t2);
      }
    }
    sum += acc;
    sumsq += acc * acc;
  }

  WalkEstimate est;
  est.samples = samples;
  est.value = sum / samples;
  if (samples > 1) {
    double var = (sumsq - sum * sum / samples) / (samples - 1);
    est.std_error = std::sqrt(std::max(0.0, var) / samples);
  }
  est.queries_used = oracle.total_queries() - q0;
  est.queries_per_sample = static_cast<double>(est.queries_used) / samples;
  return est;
}

double definitional_diag_power(SparseOracle& oracle, long i, int k) {
  // [A^k]_{ii} = sum over length-k closed paths; every node expansion reads
  // its row fresh from the oracles.
  struct Walker {
    SparseOracle& o;
    long root;
    cplx expand(long cur, int depth) {
      if (depth == 0) return cur == root ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      cplx acc = 0.0;
      for (int j = 0; j < o.sparsity(); ++j) {
        long col = o.position(cur, j);
        if (col < 0) break;
        cplx a = o.entry(cur, col);
        // Row access of a Hermitian matrix: contribution A_{col,cur} = conj(a).
        acc += std::conj(a) * expand(col, depth - 1);
      }
      return acc;
    }
  } w{oracle, i};
  return w.expand(i, k).real();
}

Eigen::MatrixXcd circulant_matrix(long D, int s) {
  if (s != 1 && s % 2 != 0)
    throw Error(ErrorKind::InvalidInput, "circulant_matrix: s must be 1 or even");
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(D, D);
  if (s == 1) {
    for (long i = 0; i < D; ++i) A(i, i) = (i % 2 == 0) ? 1.0 : -1.0;
    return A;
  }
  double w = 1.0 / s;
  for (long i = 0; i < D; ++i)
    for (int off = 1; off <= s / 2; ++off) {
      A(i, (i + off) % D) = w;
      A(i, ((i - off) % D + D) % D) = w;
    }
  return A;
}

std::vector<ScalingRow> query_scaling_report(const std::vector<int>& s_values,
                                             const std::vector<int>& k_values, long D,
                                             long samples, std::uint64_t seed) {
  if (D > 1024) throw TooLargeError("query_scaling_report: D > 1024");
  std::vector<ScalingRow> rows;
  for (int s : s_values) {
    if (s > 8) throw TooLargeError("query_scaling_report: s > 8");
    Eigen::MatrixXcd A = circulant_matrix(D, s);
    SparseOracle oracle = wrap_dense(A);
    for (int k : k_values) {
      if (k > 8) throw TooLargeError("query_scaling_report: k > 8");
      CounterRng rng(seed, static_cast<std::uint64_t>(s * 100 + k));
      std::uint64_t q0 = oracle.total_queries();
      double sum = 0.0, sumsq = 0.0;
      for (long t = 0; t < samples; ++t) {
        long i = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(D)));
        double v = definitional_diag_power(oracle, i, k);
        sum += v;
        sumsq += v * v;
      }
      ScalingRow row;
      row.s = s;
      row.k = k;
      row.D = D;
      row.samples = samples;
      row.mean = sum / samples;
      if (samples > 1) {
        double var = (sumsq - sum * sum / samples) / (samples - 1);
        row.stderr_ = std::sqrt(std::max(0.0, var) / samples);
      }
      row.queries_per_sample =
          static_cast<double>(oracle.total_queries() - q0) / static_cast<double>(samples);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace spectrace
