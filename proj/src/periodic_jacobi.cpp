#include "spectrace/periodic_jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "spectrace/errors.hpp"

namespace spectrace {

PeriodicJacobi::PeriodicJacobi(Eigen::VectorXd a_in, Eigen::VectorXd b_in, double theta_in)
    : a(std::move(a_in)), b(std::move(b_in)), theta(theta_in) {
  if (a.size() != b.size())
    throw DimensionMismatchError("PeriodicJacobi: a and b must have equal length");
  if (a.size() < 3) throw Error(ErrorKind::Precondition, "PeriodicJacobi: m must be >= 3");
  for (int i = 0; i < b.size(); ++i)
    if (!(b[i] > 0.0)) throw NonPositiveCouplingError("b[" + std::to_string(i) + "] <= 0");
}

Eigen::MatrixXcd PeriodicJacobi::materialize() const {
  const int m = size();
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(m, m);
  for (int i = 0; i < m; ++i) A(i, i) = a[i];
  for (int i = 0; i + 1 < m; ++i) {
    A(i + 1, i) = b[i];
    A(i, i + 1) = b[i];
  }
  std::complex<double> corner = b[m - 1] * std::exp(std::complex<double>(0.0, theta));
  A(0, m - 1) = corner;
  A(m - 1, 0) = std::conj(corner);
  return A;
}

Eigen::VectorXd PeriodicJacobi::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(materialize(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double leading_monomial_coeff(const ChebPoly& p) {
  ChebPoly q = p.trimmed(1e-12);
  int n = q.degree();
  double lead = q.coeffs()[n];
  // T_n has monomial lead 2^{n-1}; the affine map contributes (2/len)^n.
  double scale = (n == 0) ? 1.0 : std::ldexp(1.0, n - 1);
  return lead * scale * std::pow(2.0 / q.ref_interval().length(), n);
}

namespace {

// Coefficient vectors in the Chebyshev basis over `ref`, scalar-generic so the
// same recurrence serves double and complex-step evaluation.
template <typename S>
std::vector<S> cheb_mul_x(const std::vector<S>& c, const Interval& ref) {
  std::vector<S> tp(c.size() + 1, S(0));
  tp[1] += c[0];
  for (size_t k = 1; k < c.size(); ++k) {
    tp[k + 1] += 0.5 * c[k];
    tp[k - 1] += 0.5 * c[k];
  }
  std::vector<S> out(c.size() + 1, S(0));
  double mid = ref.mid(), half = 0.5 * ref.length();
  for (size_t k = 0; k < c.size(); ++k) out[k] += mid * c[k];
  for (size_t k = 0; k < tp.size(); ++k) out[k] += half * tp[k];
  return out;
}

}  // namespace

template <typename S>
std::vector<S> discriminant_coeffs(const std::vector<S>& a, const std::vector<S>& b,
                                   Interval ref) {
  const int m = static_cast<int>(a.size());
  auto step = [&](const std::vector<S>& pk1, const std::vector<S>& pk2, const S& diag,
                  const S& coup) {
    // p_k = (x - diag) p_{k-1} - coup^2 p_{k-2}
    std::vector<S> out = cheb_mul_x(pk1, ref);
    for (size_t j = 0; j < pk1.size(); ++j) out[j] -= diag * pk1[j];
    S c2 = coup * coup;
    for (size_t j = 0; j < pk2.size(); ++j) out[j] -= c2 * pk2[j];
    return out;
  };

  // det(xI - B): full tridiagonal, diagonal a_1..a_m, couplings b_1..b_{m-1}.
  std::vector<S> pm2 = {S(1)};
  std::vector<S> pm1 = cheb_mul_x(pm2, ref);
  pm1[0] -= a[0];
  for (int k = 2; k <= m; ++k) {
    std::vector<S> pk = step(pm1, pm2, a[k - 1], b[k - 2]);
    pm2 = std::move(pm1);
    pm1 = std::move(pk);
  }
  std::vector<S> detB = pm1;

  // det(xI - C): inner block, diagonal a_2..a_{m-1}, couplings b_2..b_{m-2}.
  std::vector<S> qm2 = {S(1)};
  std::vector<S> qm1 = cheb_mul_x(qm2, ref);
  qm1[0] -= a[1];
  for (int k = 2; k <= m - 2; ++k) {
    std::vector<S> qk = step(qm1, qm2, a[k], b[k - 1]);
    qm2 = std::move(qm1);
    qm1 = std::move(qk);
  }
  std::vector<S> detC = qm1;  // q_{m-2}

  std::vector<S> h = detB;
  S bm2 = b[m - 1] * b[m - 1];
  for (size_t j = 0; j < detC.size(); ++j) h[j] -= bm2 * detC[j];

  S e = S(2);
  for (int i = 0; i < m; ++i) e *= b[i];
  for (S& v : h) v /= e;
  return h;
}

template std::vector<double> discriminant_coeffs<double>(const std::vector<double>&,
                                                         const std::vector<double>&, Interval);
template std::vector<std::complex<double>> discriminant_coeffs<std::complex<double>>(
    const std::vector<std::complex<double>>&, const std::vector<std::complex<double>>&, Interval);

Discriminant discriminant(const PeriodicJacobi& J, Interval ref) {
  std::vector<double> a(J.a.data(), J.a.data() + J.a.size());
  std::vector<double> b(J.b.data(), J.b.data() + J.b.size());
  std::vector<double> coeffs = discriminant_coeffs<double>(a, b, ref);
  for (double v : coeffs)
    if (!std::isfinite(v)) throw OverflowError("discriminant coefficients overflowed; rescale J");
  Discriminant D;
  D.poly = ChebPoly(std::move(coeffs), ref);
  double e = 2.0;
  for (int i = 0; i < J.b.size(); ++i) e *= J.b[i];
  D.leading_e = e;
  return D;
}

double char_poly_check(const PeriodicJacobi& J) {
  const int m = J.size();
  if (m > 64) throw TooLargeError("char_poly_check: m > 64");
  Discriminant D = discriminant(J);
  double e = D.leading_e;

  // Sample across the Gershgorin interval so the identity is exercised at
  // genuine determinant magnitudes.
  double lo = J.a.minCoeff(), hi = J.a.maxCoeff();
  double bmax = J.b.maxCoeff();
  lo -= 2.0 * bmax + 0.5;
  hi += 2.0 * bmax + 0.5;
  Interval span{lo, hi};

  Eigen::MatrixXcd A = J.materialize();
  double worst = 0.0;
  const int N = 4 * m;
  for (int j = 0; j < N; ++j) {
    double t = std::cos(M_PI * (j + 0.5) / N);
    double x = span.mid() + 0.5 * span.length() * t;
    Eigen::MatrixXcd M = x * Eigen::MatrixXcd::Identity(m, m) - A;
    std::complex<double> det = M.determinant();
    double rhs = e * (D.poly(x) - std::cos(J.theta));
    double num = std::abs(det - std::complex<double>(rhs, 0.0));
    double den = std::max({1.0, std::abs(det), std::abs(rhs)});
    worst = std::max(worst, num / den);
  }
  return worst;
}

DiscriminantValidity check_discriminant_validity(const Discriminant& D, double tol) {
  DiscriminantValidity v;
  ChebPoly p = D.poly.trimmed(1e-12);
  int m = p.degree();
  if (m < 1) {
    v.reason = "discriminant has degree 0";
    return v;
  }
  if (leading_monomial_coeff(p) <= 0.0) {
    v.reason = "leading coefficient is not positive";
    return v;
  }
  ChebPoly dp = p.derivative();
  std::vector<std::complex<double>> rts = dp.roots();
  std::vector<double> real_ext;
  double imag_tol = 1e-7;
  for (const auto& z : rts)
    if (std::abs(z.imag()) <= imag_tol) real_ext.push_back(z.real());
  std::sort(real_ext.begin(), real_ext.end(), std::greater<double>());
  if (static_cast<int>(real_ext.size()) != m - 1) {
    v.reason = "expected " + std::to_string(m - 1) + " real extrema, found " +
               std::to_string(real_ext.size());
    return v;
  }
  for (size_t j = 1; j < real_ext.size(); ++j)
    if (std::abs(real_ext[j - 1] - real_ext[j]) < 1e-10) {
      v.reason = "extrema are not distinct";
      return v;
    }
  v.extrema = real_ext;
  for (size_t j = 0; j < real_ext.size(); ++j) {
    double val = p(real_ext[j]);
    v.extrema_values.push_back(val);
    double aligned = ((j + 1) % 2 == 1 ? -1.0 : 1.0) * val;  // (-1)^j Delta(nu_j), j from 1
    if (aligned < 1.0 - tol) {
      v.reason = "extremum " + std::to_string(j + 1) + " violates the alternation bound (value " +
                 std::to_string(val) + ")";
      return v;
    }
    if (aligned < 1.0) v.near_boundary = true;
  }
  v.ok = true;
  return v;
}

double delta_identity_check(const PeriodicJacobi& J, const Discriminant& D) {
  const int m = J.size();
  Eigen::MatrixXcd A = J.materialize();
  Interval ref = D.poly.ref_interval();
  Eigen::MatrixXcd At = (2.0 * A - (ref.lo + ref.hi) * Eigen::MatrixXcd::Identity(m, m)) /
                        ref.length();
  const std::vector<double>& c = D.poly.coeffs();
  Eigen::MatrixXcd b1 = Eigen::MatrixXcd::Zero(m, m), b2 = Eigen::MatrixXcd::Zero(m, m);
  for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
    Eigen::MatrixXcd b0 = 2.0 * (At * b1) - b2 + c[k] * Eigen::MatrixXcd::Identity(m, m);
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  Eigen::MatrixXcd P = At * b1 - b2 + c[0] * Eigen::MatrixXcd::Identity(m, m);
  Eigen::MatrixXcd R = P - std::cos(J.theta) * Eigen::MatrixXcd::Identity(m, m);
  return R.cwiseAbs().maxCoeff();
}

}  // namespace spectrace
