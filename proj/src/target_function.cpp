#include "spectrace/target_function.hpp"

#include <cmath>

#include "spectrace/errors.hpp"

namespace spectrace {

std::string family_name(Family f) {
  switch (f) {
    case Family::Exp: return "exp";
    case Family::Sin: return "sin";
    case Family::Cos: return "cos";
    case Family::Log: return "log";
    case Family::Inverse: return "inv";
    case Family::Custom: return "custom";
  }
  return "?";
}

TargetFunction::TargetFunction(std::function<double(double)> eval, Domain domain, Family family,
                               std::map<std::string, double> params)
    : eval_(std::move(eval)), domain_(std::move(domain)), family_(family),
      params_(std::move(params)) {
  // Range check on a dense grid; 1e-12 slack absorbs roundoff at endpoints.
  for (const Interval& iv : domain_.intervals) {
    for (int i = 0; i <= 512; ++i) {
      double x = iv.lo + iv.length() * i / 512.0;
      double v = eval_(x);
      if (!std::isfinite(v) || std::abs(v) > 1.0 + 1e-12)
        throw Error(ErrorKind::InvalidInput,
                    "TargetFunction: |f| > 1 at x = " + std::to_string(x));
    }
  }
}

TargetFunction TargetFunction::exp_family(double beta) {
  if (beta <= 0) throw Error(ErrorKind::InvalidInput, "exp family: beta must be positive");
  double scale = std::exp(beta);
  return TargetFunction([beta, scale](double x) { return std::exp(-beta * x) / scale; },
                        Domain(Interval{-1.0, 1.0}), Family::Exp, {{"beta", beta}});
}

TargetFunction TargetFunction::sin_family(double t) {
  if (t <= 0) throw Error(ErrorKind::InvalidInput, "sin family: t must be positive");
  return TargetFunction([t](double x) { return std::sin(t * x); }, Domain(Interval{-1.0, 1.0}),
                        Family::Sin, {{"t", t}});
}

TargetFunction TargetFunction::cos_family(double t) {
  if (t <= 0) throw Error(ErrorKind::InvalidInput, "cos family: t must be positive");
  return TargetFunction([t](double x) { return std::cos(t * x); }, Domain(Interval{-1.0, 1.0}),
                        Family::Cos, {{"t", t}});
}

TargetFunction TargetFunction::log_family(double beta) {
  if (beta <= 0 || beta >= 1)
    throw Error(ErrorKind::InvalidInput, "log family: need 0 < beta < 1");
  double scale = std::log(1.0 / (1.0 - beta));
  return TargetFunction([beta, scale](double x) { return std::log1p(beta * x) / scale; },
                        Domain(Interval{-1.0, 1.0}), Family::Log, {{"beta", beta}});
}

TargetFunction TargetFunction::inverse_family(double kappa) {
  if (kappa <= 1) throw Error(ErrorKind::InvalidInput, "inverse family: kappa must exceed 1");
  Domain dom(std::vector<Interval>{{-1.0, -1.0 / kappa}, {1.0 / kappa, 1.0}});
  return TargetFunction([kappa](double x) { return 1.0 / (kappa * x); }, dom, Family::Inverse,
                        {{"kappa", kappa}});
}

TargetFunction TargetFunction::custom(std::function<double(double)> eval, Domain domain) {
  return TargetFunction(std::move(eval), std::move(domain), Family::Custom);
}

TargetFunction TargetFunction::from_poly(const ChebPoly& p, Domain domain) {
  return TargetFunction([p](double x) { return p(x); }, std::move(domain), Family::Custom);
}

}  // namespace spectrace
