#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "spectrace/chebyshev.hpp"

namespace spectrace {

// Real symmetric tridiagonal matrix with a phased corner coupling:
// diagonal a_1..a_m, couplings b_1..b_{m-1} on the off-diagonals and
// b_m e^{+-i theta} in the corners.  All b_i > 0, m >= 3.
struct PeriodicJacobi {
  Eigen::VectorXd a;
  Eigen::VectorXd b;
  double theta = 0.0;

  PeriodicJacobi() = default;
  PeriodicJacobi(Eigen::VectorXd a_in, Eigen::VectorXd b_in, double theta_in = 0.0);

  int size() const { return static_cast<int>(a.size()); }
  Eigen::MatrixXcd materialize() const;
  // Real spectrum, ascending.
  Eigen::VectorXd eigenvalues() const;
};

// Degree-m polynomial Delta with det(xI - A_theta) = e (Delta(x) - cos theta),
// e = 2 b_1...b_m; independent of theta.
struct Discriminant {
  ChebPoly poly;
  double leading_e = 0.0;  // leading monomial coefficient of Delta is 1/e

  int size() const { return poly.degree(1e-12); }
};

// Monomial leading coefficient of p at its (trimmed) degree.
double leading_monomial_coeff(const ChebPoly& p);

// Discriminant via the three-term determinant recurrences, carried in the
// Chebyshev basis over `ref`.
Discriminant discriminant(const PeriodicJacobi& J, Interval ref = {-1.0, 1.0});

// Max relative residual of det(xI - A_theta) = h(x) - e cos(theta) over 4m
// Chebyshev sample points spanning the spectrum's Gershgorin interval.
double char_poly_check(const PeriodicJacobi& J);

struct DiscriminantValidity {
  bool ok = false;
  std::string reason;
  std::vector<double> extrema;        // descending
  std::vector<double> extrema_values;
  bool near_boundary = false;  // some |Delta(nu)| within 1e-9 of 1
};

// Both inversion conditions: positive leading coefficient, and m-1 distinct
// real extrema nu_1 > ... > nu_{m-1} with (-1)^j Delta(nu_j) >= 1 - tol.
DiscriminantValidity check_discriminant_validity(const Discriminant& D, double tol = 1e-9);

// || Delta(A_theta) - cos(theta) I ||_max via matrix Clenshaw.
double delta_identity_check(const PeriodicJacobi& J, const Discriminant& D);

}  // namespace spectrace
