#include "spectrace/remez.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

#include "spectrace/errors.hpp"

namespace spectrace {

namespace {

// Chebyshev-extrema layout of n points over the domain, allocated to
// intervals proportionally to their lengths.
std::vector<double> initial_references(const Domain& dom, int n) {
  const auto& ivs = dom.intervals;
  double total = dom.total_length();
  std::vector<int> counts(ivs.size(), 0);
  int assigned = 0;
  for (size_t i = 0; i < ivs.size(); ++i) {
    counts[i] = static_cast<int>(std::floor(n * ivs[i].length() / total));
    assigned += counts[i];
  }
  // Hand the remainder to the longest intervals first.
  std::vector<size_t> order(ivs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return ivs[a].length() > ivs[b].length(); });
  for (size_t i = 0; assigned < n; ++i, ++assigned) counts[order[i % order.size()]]++;

  std::vector<double> pts;
  pts.reserve(n);
  for (size_t i = 0; i < ivs.size(); ++i) {
    int c = counts[i];
    if (c == 0) continue;
    if (c == 1) {
      pts.push_back(ivs[i].mid());
      continue;
    }
    for (int j = 0; j < c; ++j) {
      double t = std::cos(M_PI * (c - 1 - j) / (c - 1));
      pts.push_back(ivs[i].mid() + 0.5 * ivs[i].length() * t);
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

struct Extremum {
  double x;
  double val;  // signed error f(x) - g(x)
};

// Golden-section maximization of s * e on [a, b].
double golden_max(const std::function<double(double)>& e, double s, double a, double b) {
  const double gr = 0.6180339887498949;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = s * e(c), fd = s * e(d);
  for (int it = 0; it < 60 && (b - a) > 1e-14; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = s * e(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = s * e(d);
    }
  }
  return fc > fd ? c : d;
}

// All local extrema of the error on a dense per-interval grid, each refined
// by golden-section search.
std::vector<Extremum> find_extrema(const TargetFunction& f, const ChebPoly& g, int grid_n) {
  auto err = [&](double x) { return f(x) - g(x); };
  std::vector<Extremum> out;
  for (const Interval& iv : f.domain().intervals) {
    int G = std::max(grid_n, 8);
    std::vector<double> xs(G + 1), es(G + 1);
    for (int i = 0; i <= G; ++i) {
      xs[i] = iv.lo + iv.length() * i / G;
      es[i] = err(xs[i]);
    }
    for (int i = 0; i <= G; ++i) {
      bool is_local = false;
      if (i == 0)
        is_local = std::abs(es[0]) >= std::abs(es[1]);
      else if (i == G)
        is_local = std::abs(es[G]) >= std::abs(es[G - 1]);
      else
        is_local = std::abs(es[i]) >= std::abs(es[i - 1]) && std::abs(es[i]) >= std::abs(es[i + 1]);
      if (!is_local) continue;
      double a = xs[std::max(0, i - 1)];
      double b = xs[std::min(G, i + 1)];
      double s = es[i] >= 0 ? 1.0 : -1.0;
      double xr = golden_max(err, s, a, b);
      double vr = err(xr);
      // Keep whichever of the grid point / refined point is stronger.
      if (std::abs(vr) >= std::abs(es[i]))
        out.push_back({xr, vr});
      else
        out.push_back({xs[i], es[i]});
    }
  }
  std::sort(out.begin(), out.end(), [](const Extremum& a, const Extremum& b) { return a.x < b.x; });
  // Merge near-duplicates, keeping the stronger one.
  std::vector<Extremum> dedup;
  for (const Extremum& c : out) {
    if (!dedup.empty() && std::abs(c.x - dedup.back().x) < 1e-11) {
      if (std::abs(c.val) > std::abs(dedup.back().val)) dedup.back() = c;
    } else {
      dedup.push_back(c);
    }
  }
  return dedup;
}

// Compress to a sign-alternating subsequence keeping the strongest
// representative of each same-sign run.
std::vector<Extremum> alternating_compress(const std::vector<Extremum>& cands) {
  std::vector<Extremum> alt;
  for (const Extremum& c : cands) {
    if (c.val == 0.0) continue;
    if (!alt.empty() && (alt.back().val > 0) == (c.val > 0)) {
      if (std::abs(c.val) > std::abs(alt.back().val)) alt.back() = c;
    } else {
      alt.push_back(c);
    }
  }
  return alt;
}

}  // namespace

std::pair<double, ChebPoly> remez_step(const TargetFunction& f,
                                       const std::vector<double>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 2) throw Error(ErrorKind::InvalidInput, "remez_step: need at least 2 points");
  for (int i = 1; i < n; ++i)
    if (!(points[i] > points[i - 1]))
      throw SingularSystemError("reference points not strictly increasing");
  const int d = n - 2;
  Interval ref = f.domain().hull();

  // Unknowns [g_0..g_d, delta]; row i: sum_k g_k T_k(x_i) - (-1)^i delta = f(x_i)
  // with i counted from 1, i.e. the first point carries +delta.
  Eigen::MatrixXd A(n, n);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    double t = (2.0 * points[i] - ref.lo - ref.hi) / ref.length();
    double tkm2 = 1.0, tkm1 = t;
    for (int k = 0; k <= d; ++k) {
      double tk;
      if (k == 0) tk = 1.0;
      else if (k == 1) tk = t;
      else {
        tk = 2.0 * t * tkm1 - tkm2;
        tkm2 = tkm1;
        tkm1 = tk;
      }
      A(i, k) = tk;
    }
    A(i, d + 1) = (i % 2 == 0) ? 1.0 : -1.0;  // -(-1)^i, i 1-based
    rhs(i) = f(points[i]);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  if (!lu.isInvertible()) throw SingularSystemError("alternation system is singular");
  Eigen::VectorXd sol = lu.solve(rhs);
  std::vector<double> coeffs(sol.data(), sol.data() + d + 1);
  return {-sol(d + 1), ChebPoly(std::move(coeffs), ref)};
}

MinimaxResult remez(const TargetFunction& f, int d, const RemezOptions& opts) {
  if (d < 0) throw Error(ErrorKind::InvalidInput, "remez: degree must be nonnegative");
  const int n_refs = d + 2;
  const Domain& dom = f.domain();
  std::vector<double> refs = initial_references(dom, n_refs);

  double fscale = 0.0;
  for (const Interval& iv : dom.intervals)
    for (int i = 0; i <= 64; ++i) fscale = std::max(fscale, std::abs(f(iv.lo + iv.length() * i / 64.0)));
  const double exact_floor = 1e-13 * (1.0 + fscale);
  const double min_gap = opts.spacing_floor * dom.hull().length();

  double delta = 0.0, max_err = 0.0;
  ChebPoly g;
  int iter = 0;
  bool converged = false;
  for (iter = 1; iter <= opts.max_iters; ++iter) {
    for (size_t i = 1; i < refs.size(); ++i)
      if (refs[i] - refs[i - 1] < min_gap)
        throw DegenerateReferencesError("reference spacing below floor at iteration " +
                                        std::to_string(iter));
    std::tie(delta, g) = remez_step(f, refs);
    std::vector<Extremum> cands = find_extrema(f, g, opts.grid_factor * n_refs);
    max_err = 0.0;
    for (const Extremum& c : cands) max_err = std::max(max_err, std::abs(c.val));

    if (max_err <= exact_floor) {
      converged = true;  // f is (numerically) a polynomial of degree <= d
      delta = std::copysign(max_err, delta == 0 ? 1.0 : delta);
      break;
    }
    if ((max_err - std::abs(delta)) / std::max(std::abs(delta), 1e-14) < opts.tol) {
      converged = true;
      break;
    }

    std::vector<Extremum> alt = alternating_compress(cands);
    while (static_cast<int>(alt.size()) > n_refs) {
      if (std::abs(alt.front().val) <= std::abs(alt.back().val))
        alt.erase(alt.begin());
      else
        alt.pop_back();
    }
    if (static_cast<int>(alt.size()) == n_refs) {
      std::vector<double> next(n_refs);
      for (int i = 0; i < n_refs; ++i) next[i] = alt[i].x;
      refs = std::move(next);
    } else {
      // Single-point exchange fallback: swap the strongest new extremum into
      // the reference set, preserving alternation.
      auto err = [&](double x) { return f(x) - g(x); };
      Extremum star{refs[0], err(refs[0])};
      for (const Extremum& c : cands)
        if (std::abs(c.val) > std::abs(star.val)) star = c;
      std::vector<double> next = refs;
      auto sgn = [](double v) { return v >= 0 ? 1 : -1; };
      if (star.x < next.front()) {
        if (sgn(star.val) == sgn(err(next.front()))) next.front() = star.x;
        else {
          next.insert(next.begin(), star.x);
          next.pop_back();
        }
      } else if (star.x > next.back()) {
        if (sgn(star.val) == sgn(err(next.back()))) next.back() = star.x;
        else {
          next.push_back(star.x);
          next.erase(next.begin());
        }
      } else {
        for (size_t j = 0; j + 1 < next.size(); ++j) {
          if (next[j] <= star.x && star.x <= next[j + 1]) {
            if (sgn(err(next[j])) == sgn(star.val)) next[j] = star.x;
            else next[j + 1] = star.x;
            break;
          }
        }
      }
      std::sort(next.begin(), next.end());
      refs = std::move(next);
    }
  }

  if (!converged)
    throw NoConvergenceError("remez: certificate gap " +
                             std::to_string(max_err - std::abs(delta)) + " after " +
                             std::to_string(opts.max_iters) + " iterations");

  MinimaxResult res;
  res.degree = d;
  res.best_poly = g;
  res.error = std::abs(delta);
  res.ref_points = refs;
  res.sign = delta >= 0 ? 1 : -1;
  res.iterations = iter;

  double ct = certify_tol(res.error);
  bool ok = true;
  for (int i = 0; i < n_refs; ++i) {
    double want = res.sign * ((i % 2 == 0) ? -1.0 : 1.0) * res.error;  // sigma (-1)^i E, i 1-based
    if (std::abs(f(refs[i]) - g(refs[i]) - want) > ct) ok = false;
  }
  if (max_err > res.error + ct) ok = false;
  res.certified = ok;
  return res;
}

std::vector<double> dual_certificate(const std::vector<double>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 2) throw Error(ErrorKind::InvalidInput, "dual_certificate: need at least 2 points");
  std::vector<double> xs = points;
  std::sort(xs.begin(), xs.end());
  for (int i = 0; i < n; ++i) {
    if (std::abs(xs[i]) < 1e-12)
      throw DegenerateCertificateError("a reference point is zero");
    if (i > 0 && xs[i] - xs[i - 1] < 1e-12)
      throw DegenerateCertificateError("coincident reference points");
  }
  // h_i = 1 / prod_{j != i} (x_i - x_j): the divided-difference weights, the
  // unique (up to scale) vector annihilating all moments x^k, k <= n-2.
  // Log-magnitude accumulation keeps large n from under/overflowing.
  std::vector<double> logmag(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i) logmag[i] -= std::log(std::abs(xs[i] - xs[j]));
  double mx = *std::max_element(logmag.begin(), logmag.end());
  std::vector<double> h(n);
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double sgn = ((n - 1 - i) % 2 == 0) ? 1.0 : -1.0;  // j > i factors are negative
    h[i] = sgn * std::exp(logmag[i] - mx);
    norm += std::abs(h[i]);
  }
  for (double& v : h) v /= norm;
  return h;
}

ApproxDegreeResult approximate_degree(const TargetFunction& f, double epsilon,
                                      const RemezOptions& opts) {
  if (!(epsilon > 0.0 && epsilon <= 1.0))
    throw Error(ErrorKind::InvalidInput, "approximate_degree: epsilon must be in (0, 1]");
  std::map<int, MinimaxResult> memo;
  auto E = [&](int d) -> const MinimaxResult& {
    auto it = memo.find(d);
    if (it == memo.end()) it = memo.emplace(d, remez(f, d, opts)).first;
    return it->second;
  };

  int hi = 0;
  if (E(0).error > epsilon) {
    int lo = 0;
    hi = 1;
    while (E(hi).error > epsilon) {
      lo = hi;
      hi *= 2;
      if (hi > opts.max_degree)
        throw SearchExceededError("no degree <= " + std::to_string(opts.max_degree) +
                                  " reaches error " + std::to_string(epsilon));
    }
    // Minimal d in (lo, hi] with E_d <= epsilon.
    while (hi - lo > 1) {
      int mid = (lo + hi) / 2;
      if (E(mid).error <= epsilon) hi = mid;
      else lo = mid;
    }
  }

  ApproxDegreeResult res;
  res.epsilon = epsilon;
  res.degree = hi;
  res.E_d = E(hi).error;
  res.E_dm1 = hi == 0 ? std::numeric_limits<double>::infinity() : E(hi - 1).error;
  res.minimax_at_d = E(hi);
  return res;
}

std::vector<RatioRow> error_ratio_table(const TargetFunction& f, int d_max,
                                        const RemezOptions& opts) {
  if (d_max < 2) throw Error(ErrorKind::InvalidInput, "error_ratio_table: d_max must be >= 2");
  std::vector<RatioRow> rows;
  double prevE = -1.0;
  bool prev_ok = false;
  for (int d = 0; d <= d_max; ++d) {
    RatioRow row;
    row.d = d;
    try {
      MinimaxResult r = remez(f, d, opts);
      row.E = r.error;
      row.certified = r.certified;
      row.ratio = (d >= 1 && prev_ok && prevE > 0) ? r.error / prevE : 0.0;
      prevE = r.error;
      prev_ok = true;
    } catch (const Error& e) {
      row.failed = true;
      row.error = e.what();
      prev_ok = false;
    }
    if (d >= 1) rows.push_back(row);
  }
  return rows;
}

}  // namespace spectrace
