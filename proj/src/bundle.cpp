#include "spectrace/bundle.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "spectrace/errors.hpp"
#include "spectrace/unitary.hpp"

namespace spectrace {

ReductionBundle assemble_reduction(const TargetFunction& f, double eps, const Circuit& c,
                                   const RemezOptions& ropts, const InverseOptions& iopts) {
  ReductionDiscriminant rd = build_reduction_discriminant(f, eps, ropts);
  if (c.gate_count() > rd.d)
    throw CircuitTooDeepError("circuit has " + std::to_string(c.gate_count()) +
                              " gates but the approximate degree is only " +
                              std::to_string(rd.d));
  Circuit padded = c;
  while (padded.gate_count() < rd.d) padded.gates.push_back(Gate::identity(0));
  padded.validate();

  PeriodicJacobi J = jacobi_from_discriminant(rd.disc, iopts);

  ReductionBundle bundle{f,           eps,      rd.d,   rd.E_d, rd.E_dm1,
                         rd.eta,      rd.eta_prime, rd.sign, rd.disc, rd.p_star,
                         J,           ClockHamiltonian(padded, J.a, J.b),
                         rd.d - c.gate_count()};
  return bundle;
}

Error2Verdict verify_error2(const ReductionBundle& bundle) {
  const ClockHamiltonian& H = bundle.hamiltonian;
  if (H.dim() > (1L << 14)) throw TooLargeError("verify_error2: dim > 2^14");
  const int m = H.clock_dim();
  const long N = 1L << H.n_qubits();

  Error2Verdict v;
  v.lhs = trace_f(H, bundle.f, TracePath::Dense) / (static_cast<double>(m) * N);
  Eigen::MatrixXcd U = materialize(H.circuit());
  double re_ntrace = normalized_trace(U).real();
  double gap = bundle.E_dm1 - bundle.eta;
  double p_term = trace_poly_block(PeriodicJacobi(H.a(), H.b(), 0.0), bundle.p_star) / m;
  v.predicted = gap * bundle.sign * re_ntrace + p_term;
  v.bound = gap * bundle.eta_prime + 1e-7;
  v.pass = std::abs(v.lhs - v.predicted) <= v.bound;
  return v;
}

std::string bundle_to_json(const ReductionBundle& b) {
  nlohmann::json out;
  out["family"] = family_name(b.f.family());
  out["params"] = b.f.params();
  out["epsilon"] = b.epsilon;
  out["d"] = b.d;
  out["E_d"] = b.E_d;
  out["E_dm1"] = b.E_dm1;
  out["eta"] = b.eta;
  out["eta_prime"] = b.eta_prime;
  out["sign"] = b.sign;
  out["padded_gates"] = b.padded_gates;
  out["jacobi"]["m"] = b.jacobi.size();
  out["jacobi"]["a"] = std::vector<double>(b.jacobi.a.data(), b.jacobi.a.data() + b.jacobi.size());
  out["jacobi"]["b"] = std::vector<double>(b.jacobi.b.data(), b.jacobi.b.data() + b.jacobi.size());
  out["jacobi"]["theta"] = b.jacobi.theta;
  out["discriminant"]["ref_interval"] = {b.disc.poly.ref_interval().lo,
                                         b.disc.poly.ref_interval().hi};
  out["discriminant"]["cheb_coeffs"] = b.disc.poly.coeffs();
  out["discriminant"]["leading_e"] = b.disc.leading_e;
  out["p_star"]["ref_interval"] = {b.p_star.ref_interval().lo, b.p_star.ref_interval().hi};
  out["p_star"]["cheb_coeffs"] = b.p_star.coeffs();
  out["circuit"] = nlohmann::json::parse(circuit_to_json(b.hamiltonian.circuit()));
  return out.dump(2);
}

}  // namespace spectrace
