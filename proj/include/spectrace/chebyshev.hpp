#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace spectrace {

struct Interval {
  double lo = -1.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
};

// Finite union of disjoint closed subintervals of [-1, 1], kept sorted.
struct Domain {
  std::vector<Interval> intervals;

  Domain() = default;
  Domain(Interval iv) : intervals{iv} {}
  Domain(std::vector<Interval> ivs);

  // Smallest interval containing the whole domain.
  Interval hull() const;
  double total_length() const;
  bool contains(double x, double tol = 0.0) const;
  // Distance to the nearest domain point (0 if inside).
  double distance(double x) const;
  // Clamp x to the nearest domain point.
  double clamp(double x) const;
};

// Polynomial in the Chebyshev-T basis over a reference interval:
//   p(x) = sum_k c_k T_k(t),  t = (2x - lo - hi) / (hi - lo).
// Degree-graded coefficients; evaluation is Clenshaw throughout.
class ChebPoly {
 public:
  ChebPoly() : coeffs_{0.0} {}
  explicit ChebPoly(std::vector<double> cheb_coeffs, Interval ref = {-1.0, 1.0});

  static ChebPoly constant(double c, Interval ref = {-1.0, 1.0});
  // p(x) = x.
  static ChebPoly identity(Interval ref = {-1.0, 1.0});
  // T_n over the reference interval.
  static ChebPoly basis(int n, Interval ref = {-1.0, 1.0});
  // Chebyshev interpolant of f at degree+1 first-kind nodes of ref.
  static ChebPoly interpolant(const std::function<double(double)>& f, int degree,
                              Interval ref = {-1.0, 1.0});
  static ChebPoly from_monomial(const std::vector<double>& mono, Interval ref = {-1.0, 1.0});

  const std::vector<double>& coeffs() const { return coeffs_; }
  Interval ref_interval() const { return ref_; }

  // Index of the last coefficient above a relative floor.
  int degree(double rel_tol = 0.0) const;

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  ChebPoly derivative() const;
  // All complex roots (colleague-matrix eigenvalues), in the x variable.
  std::vector<std::complex<double>> roots() const;
  // Real roots with |imag| below tol, sorted ascending.
  std::vector<double> real_roots(double imag_tol = 1e-8) const;

  // Monomial coefficients in the x variable, ascending powers.
  std::vector<double> to_monomial() const;

  ChebPoly operator+(const ChebPoly& o) const;
  ChebPoly operator-(const ChebPoly& o) const;
  ChebPoly operator*(double s) const;
  ChebPoly& operator*=(double s);
  // Multiplication by the domain variable x.
  ChebPoly mul_x() const;
  // Full polynomial product (same reference interval).
  ChebPoly operator*(const ChebPoly& o) const;

  double max_abs_coeff() const;
  // Drop trailing coefficients below rel_tol * max|c|.
  ChebPoly trimmed(double rel_tol = 1e-14) const;

 private:
  std::vector<double> coeffs_;
  Interval ref_{-1.0, 1.0};
};

}  // namespace spectrace
