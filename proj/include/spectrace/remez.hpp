#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectrace/chebyshev.hpp"
#include "spectrace/target_function.hpp"

namespace spectrace {

struct RemezOptions {
  // Converged when (max_err - |delta|) / max(|delta|, 1e-14) drops below tol.
  double tol = 1e-9;
  int max_iters = 100;
  // Dense-scan resolution: grid_factor * (d + 2) points per interval.
  int grid_factor = 64;
  // Reference points closer than this (times the hull length) are degenerate.
  double spacing_floor = 1e-12;
  // Ceiling for the approximate-degree search.
  int max_degree = 64;
};

struct MinimaxResult {
  int degree = 0;
  ChebPoly best_poly;
  double error = 0.0;  // E_d
  // d + 2 strictly increasing points with f(x_i) - P(x_i) = sign * (-1)^i * E
  // (i counted from 1).
  std::vector<double> ref_points;
  int sign = 1;
  int iterations = 0;
  bool certified = false;
};

inline double certify_tol(double error) {
  return std::max(1e-9, 1e-12 * (1.0 + std::abs(error)));
}

// One exchange step: solve the alternation system g(x_i) = f(x_i) + (-1)^i delta
// at the given points (i from 1).  Returns the signed delta and g of degree
// <= points.size() - 2 in the Chebyshev basis over the domain hull.
std::pair<double, ChebPoly> remez_step(const TargetFunction& f, const std::vector<double>& points);

// Best uniform approximation of degree <= d with equioscillation certificate.
MinimaxResult remez(const TargetFunction& f, int d, const RemezOptions& opts = {});

// Normalized dual certificate at d+2 alternation points: the null vector of
// the moment matrix [x_i^k], k = 0..d, scaled so sum |h_i| = 1.
std::vector<double> dual_certificate(const std::vector<double>& points);

struct ApproxDegreeResult {
  double epsilon = 0.0;
  int degree = 0;
  double E_d = 0.0;
  double E_dm1 = 0.0;  // +inf when degree == 0
  MinimaxResult minimax_at_d;
};

// Minimal d with E_d <= epsilon, by doubling then binary search.
ApproxDegreeResult approximate_degree(const TargetFunction& f, double epsilon,
                                      const RemezOptions& opts = {});

struct RatioRow {
  int d = 0;
  double E = 0.0;
  double ratio = 0.0;  // E_d / E_{d-1}
  bool certified = false;
  bool failed = false;
  std::string error;
};

// Rows for d = 1..d_max; failed rows are marked and do not stop the table.
std::vector<RatioRow> error_ratio_table(const TargetFunction& f, int d_max,
                                        const RemezOptions& opts = {});

}  // namespace spectrace
