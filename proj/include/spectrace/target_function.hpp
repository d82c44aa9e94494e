#pragma once

#include <functional>
#include <map>
#include <string>

#include "spectrace/chebyshev.hpp"

namespace spectrace {

enum class Family { Exp, Sin, Cos, Log, Inverse, Custom };

std::string family_name(Family f);

// A continuous scalar target with range inside [-1, 1] on its domain.
// Families carry the normalization that puts them in range:
//   exp:     e^{-beta x} / e^{beta}           on [-1, 1]
//   sin/cos: sin(t x), cos(t x)               on [-1, 1]
//   log:     log(1 + beta x) / log(1/(1-beta)) on [-1, 1], 0 < beta < 1
//   inverse: 1 / (kappa x)   on [-1, -1/kappa] u [1/kappa, 1], kappa > 1
class TargetFunction {
 public:
  TargetFunction(std::function<double(double)> eval, Domain domain, Family family,
                 std::map<std::string, double> params = {});

  static TargetFunction exp_family(double beta);
  static TargetFunction sin_family(double t);
  static TargetFunction cos_family(double t);
  static TargetFunction log_family(double beta);
  static TargetFunction inverse_family(double kappa);
  static TargetFunction custom(std::function<double(double)> eval, Domain domain);
  // Convenience: the polynomial itself as a custom target.
  static TargetFunction from_poly(const ChebPoly& p, Domain domain);

  double operator()(double x) const { return eval_(x); }
  const Domain& domain() const { return domain_; }
  Family family() const { return family_; }
  const std::map<std::string, double>& params() const { return params_; }

 private:
  std::function<double(double)> eval_;
  Domain domain_;
  Family family_;
  std::map<std::string, double> params_;
};

}  // namespace spectrace
