#include "spectrace/chebyshev.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "spectrace/errors.hpp"

namespace spectrace {

Domain::Domain(std::vector<Interval> ivs) : intervals(std::move(ivs)) {
  if (intervals.empty()) throw Error(ErrorKind::InvalidInput, "Domain: empty interval list");
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (size_t i = 0; i < intervals.size(); ++i) {
    const Interval& iv = intervals[i];
    if (!(iv.lo < iv.hi)) throw Error(ErrorKind::InvalidInput, "Domain: interval with lo >= hi");
    if (iv.lo < -1.0 - 1e-12 || iv.hi > 1.0 + 1e-12)
      throw Error(ErrorKind::InvalidInput, "Domain: interval outside [-1, 1]");
    if (i > 0 && intervals[i - 1].hi >= iv.lo)
      throw Error(ErrorKind::InvalidInput, "Domain: overlapping intervals");
  }
}

Interval Domain::hull() const { return {intervals.front().lo, intervals.back().hi}; }

double Domain::total_length() const {
  return std::accumulate(intervals.begin(), intervals.end(), 0.0,
                         [](double s, const Interval& iv) { return s + iv.length(); });
}

bool Domain::contains(double x, double tol) const {
  for (const Interval& iv : intervals)
    if (iv.contains(x, tol)) return true;
  return false;
}

double Domain::distance(double x) const {
  double best = std::numeric_limits<double>::infinity();
  for (const Interval& iv : intervals) {
    if (iv.contains(x)) return 0.0;
    best = std::min(best, std::min(std::abs(x - iv.lo), std::abs(x - iv.hi)));
  }
  return best;
}

double Domain::clamp(double x) const {
  double best = std::numeric_limits<double>::infinity();
  double arg = x;
  for (const Interval& iv : intervals) {
    if (iv.contains(x)) return x;
    if (std::abs(x - iv.lo) < best) { best = std::abs(x - iv.lo); arg = iv.lo; }
    if (std::abs(x - iv.hi) < best) { best = std::abs(x - iv.hi); arg = iv.hi; }
  }
  return arg;
}

ChebPoly::ChebPoly(std::vector<double> cheb_coeffs, Interval ref)
    : coeffs_(std::move(cheb_coeffs)), ref_(ref) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  if (!(ref_.lo < ref_.hi))
    throw Error(ErrorKind::InvalidInput, "ChebPoly: reference interval with lo >= hi");
}

ChebPoly ChebPoly::constant(double c, Interval ref) { return ChebPoly({c}, ref); }

ChebPoly ChebPoly::identity(Interval ref) {
  // x = mid + (len/2) t.
  return ChebPoly({ref.mid(), 0.5 * ref.length()}, ref);
}

ChebPoly ChebPoly::basis(int n, Interval ref) {
  std::vector<double> c(static_cast<size_t>(n) + 1, 0.0);
  c.back() = 1.0;
  return ChebPoly(std::move(c), ref);
}

ChebPoly ChebPoly::interpolant(const std::function<double(double)>& f, int degree, Interval ref) {
  const int n = degree + 1;
  std::vector<double> fx(n);
  for (int j = 0; j < n; ++j) {
    double t = std::cos(M_PI * (j + 0.5) / n);
    fx[j] = f(ref.mid() + 0.5 * ref.length() * t);
  }
  std::vector<double> c(n, 0.0);
  for (int k = 0; k < n; ++k) {
    long double s = 0;
    for (int j = 0; j < n; ++j) s += (long double)fx[j] * std::cos(M_PI * k * (j + 0.5) / n);
    c[k] = static_cast<double>(s * (k == 0 ? 1.0L : 2.0L) / n);
  }
  return ChebPoly(std::move(c), ref);
}

int ChebPoly::degree(double rel_tol) const {
  double floor = rel_tol * max_abs_coeff();
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k)
    if (std::abs(coeffs_[k]) > floor) return k;
  return 0;
}

template <typename Scalar>
static Scalar clenshaw(const std::vector<double>& c, Scalar t) {
  Scalar b1{}, b2{};
  for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
    Scalar b0 = 2.0 * t * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + c[0];
}

double ChebPoly::operator()(double x) const {
  double t = (2.0 * x - ref_.lo - ref_.hi) / ref_.length();
  return clenshaw<double>(coeffs_, t);
}

std::complex<double> ChebPoly::operator()(std::complex<double> x) const {
  std::complex<double> t = (2.0 * x - ref_.lo - ref_.hi) / ref_.length();
  return clenshaw<std::complex<double>>(coeffs_, t);
}

ChebPoly ChebPoly::derivative() const {
  int n = degree();
  if (n == 0) return ChebPoly::constant(0.0, ref_);
  // c'_k = c'_{k+2} + 2(k+1) c_{k+1}, the k = 0 term halved.
  std::vector<double> d(static_cast<size_t>(n), 0.0);
  for (int k = n - 1; k >= 0; --k)
    d[k] = (k + 2 <= n - 1 ? d[k + 2] : 0.0) + 2.0 * (k + 1) * coeffs_[k + 1];
  d[0] *= 0.5;
  double scale = 2.0 / ref_.length();  // dt/dx
  for (double& v : d) v *= scale;
  return ChebPoly(std::move(d), ref_);
}

std::vector<std::complex<double>> ChebPoly::roots() const {
  ChebPoly p = trimmed(1e-13);
  int n = p.degree();
  if (n == 0) return {};
  const std::vector<double>& c = p.coeffs_;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  if (n == 1) {
    A(0, 0) = -c[0] / c[1];
  } else {
    A(0, 1) = 1.0;
    for (int k = 1; k < n - 1; ++k) {
      A(k, k - 1) = 0.5;
      A(k, k + 1) = 0.5;
    }
    for (int j = 0; j < n; ++j) A(n - 1, j) = -0.5 * c[j] / c[n];
    A(n - 1, n - 2) += 0.5;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(A);
  std::vector<std::complex<double>> out(n);
  for (int i = 0; i < n; ++i) {
    std::complex<double> t = es.eigenvalues()[i];
    out[i] = ref_.mid() + 0.5 * ref_.length() * t;
  }
  return out;
}

std::vector<double> ChebPoly::real_roots(double imag_tol) const {
  std::vector<double> out;
  for (const auto& z : roots())
    if (std::abs(z.imag()) <= imag_tol) out.push_back(z.real());
  std::sort(out.begin(), out.end());
  return out;
}

// Basis changes run in __float128: the T_k <-> x^k conversion matrix has
// 1-norm growth ~ cosh(k asinh 1), about 9e11 at k = 32, which would eat most
// of a double's mantissa on the way through.
using quad = __float128;

std::vector<double> ChebPoly::to_monomial() const {
  int n = degree();
  std::vector<quad> acc(static_cast<size_t>(n) + 1, quad(0));
  std::vector<quad> tkm2 = {quad(1)}, tkm1 = {quad(0), quad(1)};
  for (int k = 0; k <= n; ++k) {
    std::vector<quad> tk;
    if (k == 0) tk = {quad(1)};
    else if (k == 1) tk = {quad(0), quad(1)};
    else {
      tk.assign(static_cast<size_t>(k) + 1, quad(0));
      for (size_t j = 0; j < tkm1.size(); ++j) tk[j + 1] += quad(2) * tkm1[j];
      for (size_t j = 0; j < tkm2.size(); ++j) tk[j] -= tkm2[j];
      tkm2 = tkm1;
      tkm1 = tk;
    }
    for (size_t j = 0; j < tk.size(); ++j) acc[j] += quad(coeffs_[k]) * tk[j];
  }
  // Substitute t = alpha x + beta by Horner on the t-coefficients.
  quad alpha = quad(2) / quad(ref_.length());
  quad beta = -(quad(ref_.lo) + quad(ref_.hi)) / quad(ref_.length());
  std::vector<quad> res = {acc[n]};
  for (int k = n - 1; k >= 0; --k) {
    std::vector<quad> nxt(res.size() + 1, quad(0));
    for (size_t j = 0; j < res.size(); ++j) {
      nxt[j + 1] += res[j] * alpha;
      nxt[j] += res[j] * beta;
    }
    nxt[0] += acc[k];
    res = std::move(nxt);
  }
  std::vector<double> out(res.size());
  for (size_t j = 0; j < res.size(); ++j) out[j] = static_cast<double>(res[j]);
  return out;
}

ChebPoly ChebPoly::from_monomial(const std::vector<double>& mono, Interval ref) {
  if (mono.empty()) return ChebPoly::constant(0.0, ref);
  // Horner: acc <- x * acc + m_k, with x * (.) expanded in the T basis.
  quad mid = (quad(ref.lo) + quad(ref.hi)) / quad(2);
  quad half_len = (quad(ref.hi) - quad(ref.lo)) / quad(2);
  std::vector<quad> acc = {quad(mono.back())};
  for (int k = static_cast<int>(mono.size()) - 2; k >= 0; --k) {
    std::vector<quad> tp(acc.size() + 1, quad(0));
    tp[1] += acc[0];
    for (size_t j = 1; j < acc.size(); ++j) {
      tp[j + 1] += acc[j] / quad(2);
      tp[j - 1] += acc[j] / quad(2);
    }
    std::vector<quad> nxt(acc.size() + 1, quad(0));
    for (size_t j = 0; j < acc.size(); ++j) nxt[j] += mid * acc[j];
    for (size_t j = 0; j < tp.size(); ++j) nxt[j] += half_len * tp[j];
    nxt[0] += quad(mono[static_cast<size_t>(k)]);
    acc = std::move(nxt);
  }
  std::vector<double> c(acc.size());
  for (size_t j = 0; j < acc.size(); ++j) c[j] = static_cast<double>(acc[j]);
  return ChebPoly(std::move(c), ref);
}

ChebPoly ChebPoly::operator+(const ChebPoly& o) const {
  std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return ChebPoly(std::move(c), ref_);
}

ChebPoly ChebPoly::operator-(const ChebPoly& o) const {
  std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return ChebPoly(std::move(c), ref_);
}

ChebPoly ChebPoly::operator*(double s) const {
  std::vector<double> c = coeffs_;
  for (double& v : c) v *= s;
  return ChebPoly(std::move(c), ref_);
}

ChebPoly& ChebPoly::operator*=(double s) {
  for (double& v : coeffs_) v *= s;
  return *this;
}

ChebPoly ChebPoly::mul_x() const {
  // x p = mid * p + (len/2) (t p), with t T_0 = T_1 and
  // t T_k = (T_{k+1} + T_{k-1}) / 2 for k >= 1.
  size_t n = coeffs_.size();
  std::vector<double> tp(n + 1, 0.0);
  tp[1] += coeffs_[0];
  for (size_t k = 1; k < n; ++k) {
    tp[k + 1] += 0.5 * coeffs_[k];
    tp[k - 1] += 0.5 * coeffs_[k];
  }
  std::vector<double> c(n + 1, 0.0);
  double half_len = 0.5 * ref_.length();
  for (size_t k = 0; k < n; ++k) c[k] += ref_.mid() * coeffs_[k];
  for (size_t k = 0; k <= n; ++k) c[k] += half_len * tp[k];
  return ChebPoly(std::move(c), ref_);
}

ChebPoly ChebPoly::operator*(const ChebPoly& o) const {
  // T_j T_k = (T_{j+k} + T_{|j-k|}) / 2.
  std::vector<double> c(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0.0) continue;
    for (size_t k = 0; k < o.coeffs_.size(); ++k) {
      double v = 0.5 * coeffs_[j] * o.coeffs_[k];
      c[j + k] += v;
      c[static_cast<size_t>(std::abs(static_cast<long>(j) - static_cast<long>(k)))] += v;
    }
  }
  return ChebPoly(std::move(c), ref_);
}

double ChebPoly::max_abs_coeff() const {
  double m = 0.0;
  for (double v : coeffs_) m = std::max(m, std::abs(v));
  return m;
}

ChebPoly ChebPoly::trimmed(double rel_tol) const {
  double floor = rel_tol * max_abs_coeff();
  size_t n = coeffs_.size();
  while (n > 1 && std::abs(coeffs_[n - 1]) <= floor) --n;
  return ChebPoly(std::vector<double>(coeffs_.begin(), coeffs_.begin() + n), ref_);
}

}  // namespace spectrace
