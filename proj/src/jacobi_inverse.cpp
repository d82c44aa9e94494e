#include "spectrace/jacobi_inverse.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>

#include "spectrace/errors.hpp"
#include "spectrace/rng.hpp"

namespace spectrace {

template <typename S>
std::vector<S> discriminant_coeffs(const std::vector<S>& a, const std::vector<S>& b, Interval ref);

namespace {

using cplx = std::complex<double>;

struct Problem {
  int m = 0;
  Interval ref;
  std::vector<double> target;  // m+1 coefficients
  double scale = 1.0;
  bool symmetric = false;  // optimize with a frozen at zero

  int n_params() const { return symmetric ? m : 2 * m; }

  // u = [a_1..a_m, l_1..l_m] with b = exp(l); symmetric mode drops a.
  template <typename S>
  std::vector<S> residual(const std::vector<S>& u) const {
    std::vector<S> a(m), b(m);
    for (int i = 0; i < m; ++i) {
      a[i] = symmetric ? S(0) : u[i];
      b[i] = std::exp(u[(symmetric ? 0 : m) + i]);
    }
    std::vector<S> c = discriminant_coeffs<S>(a, b, ref);
    std::vector<S> r(static_cast<size_t>(m) + 1, S(0));
    for (size_t j = 0; j < r.size(); ++j) {
      S cj = j < c.size() ? c[j] : S(0);
      r[j] = (cj - target[j]) / scale;
    }
    return r;
  }

  Eigen::VectorXd residual_d(const Eigen::VectorXd& u) const {
    std::vector<double> uv(u.data(), u.data() + u.size());
    std::vector<double> r = residual<double>(uv);
    return Eigen::Map<Eigen::VectorXd>(r.data(), r.size());
  }

  // Complex-step derivatives: exact to roundoff, no cancellation.
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& u) const {
    const double h = 1e-100;
    Eigen::MatrixXd J(m + 1, u.size());
    std::vector<cplx> uc(u.size());
    for (int j = 0; j < u.size(); ++j) uc[j] = u[j];
    for (int p = 0; p < u.size(); ++p) {
      uc[p] += cplx(0.0, h);
      std::vector<cplx> r = residual<cplx>(uc);
      for (int j = 0; j <= m; ++j) J(j, p) = r[j].imag() / h;
      uc[p] = u[p];
    }
    return J;
  }
};

// Damped Gauss-Newton with minimum-norm steps (SVD pseudo-inverse); returns
// true when the residual tolerance is met.
bool solve_lm(const Problem& prob, Eigen::VectorXd& u, double tol, int max_iters) {
  double lambda = 1e-4;
  Eigen::VectorXd r = prob.residual_d(u);
  double rn = r.norm();
  for (int it = 0; it < max_iters; ++it) {
    if (r.lpNorm<Eigen::Infinity>() < tol) return true;
    Eigen::MatrixXd J = prob.jacobian(u);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    bool accepted = false;
    for (int tries = 0; tries < 14; ++tries) {
      Eigen::VectorXd w = svd.matrixU().transpose() * r;
      for (int k = 0; k < sv.size(); ++k) w[k] *= -sv[k] / (sv[k] * sv[k] + lambda);
      Eigen::VectorXd step = svd.matrixV() * w;
      Eigen::VectorXd u2 = u + step;
      Eigen::VectorXd r2 = prob.residual_d(u2);
      double rn2 = r2.norm();
      if (rn2 < rn) {
        u = std::move(u2);
        r = std::move(r2);
        rn = rn2;
        lambda = std::max(lambda * 0.3, 1e-14);
        accepted = true;
        break;
      }
      lambda *= 10.0;
      if (lambda > 1e14) break;
    }
    if (!accepted) return r.lpNorm<Eigen::Infinity>() < tol;
  }
  return r.lpNorm<Eigen::Infinity>() < tol;
}

}  // namespace

PeriodicJacobi jacobi_from_discriminant(const Discriminant& target, const InverseOptions& opts) {
  ChebPoly p = target.poly.trimmed(1e-12);
  const int m = p.degree();
  if (m < 3) throw InvalidDiscriminantError("degree " + std::to_string(m) + " is below 3");
  DiscriminantValidity val = check_discriminant_validity(target);
  if (!val.ok) throw InvalidDiscriminantError(val.reason);

  Problem prob;
  prob.m = m;
  prob.ref = p.ref_interval();
  prob.target.assign(static_cast<size_t>(m) + 1, 0.0);
  for (int j = 0; j <= m && j < static_cast<int>(p.coeffs().size()); ++j)
    prob.target[j] = p.coeffs()[j];
  prob.scale = p.max_abs_coeff();

  // Root-hull initial guess: diagonal at the hull midpoint, couplings at a
  // quarter of the hull width (exact for the pure-Chebyshev discriminant).
  std::vector<double> rts = p.real_roots(1e-6);
  double rlo, rhi;
  if (rts.size() >= 2) {
    rlo = rts.front();
    rhi = rts.back();
  } else {
    rlo = prob.ref.lo;
    rhi = prob.ref.hi;
  }
  double mid = 0.5 * (rlo + rhi), width = std::max(rhi - rlo, 1e-3);
  double l0 = std::log(width / 4.0);

  // Parity shortcut: a symmetric discriminant admits a zero-diagonal member of
  // the isospectral family; finding it keeps downstream sparsity counts tight.
  bool parity_ok = false;
  if (std::abs(prob.ref.mid()) < 1e-12 && std::abs(mid) < 1e-9) {
    parity_ok = true;
    int want = (m % 2 == 0) ? 1 : 0;  // even m: odd-index coeffs vanish
    for (int j = 0; j <= m; ++j)
      if (j % 2 == want && std::abs(prob.target[j]) > 1e-10 * prob.scale) parity_ok = false;
  }

  const int first_restart = parity_ok ? -1 : 0;
  double best_resid = std::numeric_limits<double>::infinity();
  for (int restart = first_restart; restart < opts.max_restarts; ++restart) {
    prob.symmetric = (restart == -1);
    Eigen::VectorXd u(prob.n_params());
    if (prob.symmetric) {
      for (int i = 0; i < m; ++i) u[i] = l0;
    } else {
      for (int i = 0; i < m; ++i) u[i] = mid;
      for (int i = 0; i < m; ++i) u[m + i] = l0;
    }
    if (restart > 0) {
      CounterRng rng(opts.seed, static_cast<std::uint64_t>(restart));
      for (int i = 0; i < m; ++i) u[i] += 0.15 * width * rng.normal();
      for (int i = 0; i < m; ++i) u[m + i] += 0.4 * rng.normal();
    }
    if (solve_lm(prob, u, opts.residual_tol, opts.max_iters)) {
      Eigen::VectorXd a = Eigen::VectorXd::Zero(m), b(m);
      for (int i = 0; i < m; ++i) {
        if (!prob.symmetric) a[i] = u[i];
        b[i] = std::exp(u[(prob.symmetric ? 0 : m) + i]);
      }
      return PeriodicJacobi(a, b, 0.0);
    }
    best_resid = std::min(best_resid, (double)prob.residual_d(u).lpNorm<Eigen::Infinity>());
  }
  throw NoConvergenceError("jacobi_from_discriminant stalled; best scaled residual " +
                           std::to_string(best_resid));
}

}  // namespace spectrace
