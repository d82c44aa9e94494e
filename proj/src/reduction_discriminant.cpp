#include "spectrace/reduction_discriminant.hpp"

#include <cmath>

#include "spectrace/errors.hpp"

namespace spectrace {

ReductionDiscriminant build_reduction_discriminant(const TargetFunction& f, double eps,
                                                   const RemezOptions& opts) {
  ApproxDegreeResult adeg = approximate_degree(f, eps, opts);
  const int d = adeg.degree;
  if (d < 3)
    throw Error(ErrorKind::Precondition,
                "build_reduction_discriminant: approximate degree " + std::to_string(d) +
                    " at eps = " + std::to_string(eps) + " is below the minimum 3");
  const double E_d = adeg.E_d;
  const double E_dm1 = adeg.E_dm1;
  if (!(E_d / E_dm1 < 0.5))
    throw RatioConditionFailedError("E_d/E_{d-1} = " + std::to_string(E_d / E_dm1) +
                                    " is not below 1/2 at d = " + std::to_string(d));
  const double eta = E_d;
  const double gap = E_dm1 - eta;
  if (gap < 1e-6) throw DegenerateGapError("E_{d-1} - eta = " + std::to_string(gap));

  MinimaxResult rm1 = remez(f, d - 1, opts);
  const ChebPoly& g = adeg.minimax_at_d.best_poly;
  double lead = g.coeffs().size() > static_cast<size_t>(d) ? g.coeffs()[d] : 0.0;
  int sign = lead >= 0 ? 1 : -1;

  ChebPoly delta = (g - rm1.best_poly) * (sign / gap);
  double eta_prime = eta / gap;

  ReductionDiscriminant out;
  out.disc.poly = delta;
  out.disc.leading_e = 1.0 / leading_monomial_coeff(delta);
  out.p_star = rm1.best_poly;
  out.d = d;
  out.E_d = E_d;
  out.E_dm1 = E_dm1;
  out.eta = eta;
  out.eta_prime = eta_prime;
  out.sign = sign;
  out.minimax_d = adeg.minimax_at_d;
  out.minimax_dm1 = rm1;

  DiscriminantValidity val = check_discriminant_validity(out.disc);
  if (!val.ok) throw InvalidDiscriminantError("constructed discriminant fails validity: " +
                                              val.reason);

  // Dense-grid check of the approximation bound the construction promises.
  double worst = 0.0;
  for (const Interval& iv : f.domain().intervals) {
    for (int i = 0; i <= 2048; ++i) {
      double x = iv.lo + iv.length() * i / 2048.0;
      double lhs = std::abs(delta(x) - sign * (f(x) - rm1.best_poly(x)) / gap);
      worst = std::max(worst, lhs);
    }
  }
  if (worst > eta_prime + 1e-9)
    throw Error(ErrorKind::Precondition,
                "constructed discriminant misses its approximation bound: " +
                    std::to_string(worst) + " > " + std::to_string(eta_prime));
  return out;
}

}  // namespace spectrace
