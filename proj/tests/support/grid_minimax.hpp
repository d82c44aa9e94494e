#pragma once

// Independent minimax oracle for cross-checking the production Remez path:
// discrete exchange on a fixed grid, monomial basis, long-double elimination,
// single-point exchange only, then parabolic off-grid refinement.  Shares no
// code with src/remez.cpp.

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

struct GridMinimaxResult {
  long double error = 0.0L;
  std::vector<long double> mono;    // monomial coefficients, ascending
  std::vector<long double> points;  // final alternation points
};

namespace detail {

inline std::vector<long double> solve_dense(std::vector<std::vector<long double>> A,
                                            std::vector<long double> rhs) {
  const int n = static_cast<int>(A.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs((double)A[r][col]) > std::fabs((double)A[piv][col])) piv = r;
    std::swap(A[piv], A[col]);
    std::swap(rhs[piv], rhs[col]);
    if (A[col][col] == 0.0L) throw std::runtime_error("grid_minimax: singular system");
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      long double fac = A[r][col] / A[col][col];
      for (int c = col; c < n; ++c) A[r][c] -= fac * A[col][c];
      rhs[r] -= fac * rhs[col];
    }
  }
  std::vector<long double> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / A[i][i];
  return x;
}

inline long double horner(const std::vector<long double>& c, long double x) {
  long double acc = 0.0L;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) acc = acc * x + c[k];
  return acc;
}

}  // namespace detail

// f continuous on the union of closed intervals; d >= 0.  grid_total points
// are spread over the union proportionally to interval lengths.
inline GridMinimaxResult grid_minimax(const std::function<double(double)>& f,
                                      const std::vector<std::array<double, 2>>& intervals,
                                      int d, int grid_total = 2001) {
  std::vector<long double> grid;
  double total = 0.0;
  for (const auto& iv : intervals) total += iv[1] - iv[0];
  for (const auto& iv : intervals) {
    int count = std::max(2, static_cast<int>(grid_total * (iv[1] - iv[0]) / total));
    for (int i = 0; i < count; ++i)
      grid.push_back((long double)iv[0] + (long double)(iv[1] - iv[0]) * i / (count - 1));
  }
  std::sort(grid.begin(), grid.end());
  const int G = static_cast<int>(grid.size());
  const int n = d + 2;
  if (G < n) throw std::runtime_error("grid_minimax: grid too small");

  std::vector<long double> fg(G);
  for (int i = 0; i < G; ++i) fg[i] = f(static_cast<double>(grid[i]));

  // Reference indices spread over the grid.
  std::vector<int> ref(n);
  for (int i = 0; i < n; ++i) ref[i] = static_cast<int>((long double)i * (G - 1) / (n - 1));

  std::vector<long double> mono;
  long double delta = 0.0L;
  auto solve_at = [&](const std::vector<long double>& xs, const std::vector<long double>& ys) {
    std::vector<std::vector<long double>> A(n, std::vector<long double>(n, 0.0L));
    std::vector<long double> rhs(n);
    for (int i = 0; i < n; ++i) {
      long double p = 1.0L;
      for (int k = 0; k <= d; ++k) {
        A[i][k] = p;
        p *= xs[i];
      }
      A[i][d + 1] = (i % 2 == 0) ? 1.0L : -1.0L;
      rhs[i] = ys[i];
    }
    std::vector<long double> sol = detail::solve_dense(std::move(A), std::move(rhs));
    mono.assign(sol.begin(), sol.begin() + d + 1);
    delta = sol[d + 1];
  };

  for (int iter = 0; iter < 400; ++iter) {
    std::vector<long double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
      xs[i] = grid[ref[i]];
      ys[i] = fg[ref[i]];
    }
    solve_at(xs, ys);
    // Error scan over the whole grid.
    int worst = 0;
    long double emax = 0.0L;
    std::vector<long double> err(G);
    for (int i = 0; i < G; ++i) {
      err[i] = fg[i] - detail::horner(mono, grid[i]);
      if (std::fabs((double)err[i]) > std::fabs((double)emax)) {
        emax = err[i];
        worst = i;
      }
    }
    if (std::fabs((double)emax) <= std::fabs((double)delta) * (1.0 + 1e-13) + 1e-18) break;
    // Single-point exchange of the worst grid point.
    auto sgn = [](long double v) { return v >= 0 ? 1 : -1; };
    if (worst < ref.front()) {
      if (sgn(err[worst]) == sgn(err[ref.front()])) ref.front() = worst;
      else {
        ref.insert(ref.begin(), worst);
        ref.pop_back();
      }
    } else if (worst > ref.back()) {
      if (sgn(err[worst]) == sgn(err[ref.back()])) ref.back() = worst;
      else {
        ref.push_back(worst);
        ref.erase(ref.begin());
      }
    } else {
      for (int j = 0; j + 1 < n; ++j) {
        if (ref[j] <= worst && worst <= ref[j + 1]) {
          if (sgn(err[ref[j]]) == sgn(err[worst])) ref[j] = worst;
          else ref[j + 1] = worst;
          break;
        }
      }
    }
  }

  // Off-grid parabolic refinement of the alternation points.
  std::vector<long double> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = grid[ref[i]];
  auto in_domain = [&](long double x) {
    for (const auto& iv : intervals)
      if (x >= (long double)iv[0] && x <= (long double)iv[1]) return true;
    return false;
  };
  for (int round = 0; round < 4; ++round) {
    for (int i = 0; i < n; ++i) {
      long double h = (grid[1] - grid[0]);
      long double x0 = pts[i];
      if (!in_domain(x0 - h) || !in_domain(x0 + h)) continue;
      auto e = [&](long double x) { return (long double)f((double)x) - detail::horner(mono, x); };
      long double em = e(x0 - h), e0 = e(x0), ep = e(x0 + h);
      long double denom = em - 2 * e0 + ep;
      if (std::fabs((double)denom) > 1e-30) {
        long double shift = 0.5L * (em - ep) / denom * h;
        if (std::fabs((double)shift) < (double)h) {
          long double cand = x0 + shift;
          if (in_domain(cand) && std::fabs((double)e(cand)) >= std::fabs((double)e0))
            pts[i] = cand;
        }
      }
    }
    std::vector<long double> ys(n);
    for (int i = 0; i < n; ++i) ys[i] = f((double)pts[i]);
    solve_at(pts, ys);
  }

  GridMinimaxResult out;
  out.error = std::fabs((double)delta);
  out.mono = mono;
  out.points = pts;
  return out;
}

}  // namespace oracle
