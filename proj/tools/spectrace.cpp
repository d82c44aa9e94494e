// spectrace: minimax approximation, periodic Jacobi inversion, clock-
// Hamiltonian reduction and trace-estimation experiments from one binary.

#include <CLI11.hpp>
#include <Eigen/Core>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "spectrace/bundle.hpp"
#include "spectrace/dqc1.hpp"
#include "spectrace/errors.hpp"
#include "spectrace/forrelation.hpp"
#include "spectrace/sparse_instance.hpp"
#include "spectrace/unitary.hpp"
#include "spectrace/walk_estimator.hpp"

using namespace spectrace;

namespace {

constexpr const char* kVersion = "spectrace 0.1.0";

std::string resolve_out(const std::string& path) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  const char* base = std::getenv("SPECTRACE_OUT_DIR");
  if (p.is_relative() && base != nullptr) p = std::filesystem::path(base) / p;
  return p.string();
}

std::ostream* open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return &std::cout;
  file.open(resolve_out(path));
  if (!file) throw Error(ErrorKind::InvalidInput, "cannot open output file " + path);
  return &file;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// Sums of c*x^k terms, e.g. "x^2", "0.5*x^3 - x + 1".
ChebPoly parse_poly_expr(const std::string& expr) {
  std::vector<double> mono;
  auto bump = [&](size_t k, double c) {
    if (mono.size() <= k) mono.resize(k + 1, 0.0);
    mono[k] += c;
  };
  size_t i = 0;
  double sign = 1.0;
  auto skip_ws = [&] { while (i < expr.size() && std::isspace(expr[i])) ++i; };
  skip_ws();
  while (i < expr.size()) {
    if (expr[i] == '+') { sign = 1.0; ++i; skip_ws(); continue; }
    if (expr[i] == '-') { sign = -1.0; ++i; skip_ws(); continue; }
    double coef = 1.0;
    bool have_coef = false;
    if (std::isdigit(expr[i]) || expr[i] == '.') {
      size_t used = 0;
      coef = std::stod(expr.substr(i), &used);
      i += used;
      have_coef = true;
      skip_ws();
      if (i < expr.size() && expr[i] == '*') { ++i; skip_ws(); }
    }
    size_t power = 0;
    if (i < expr.size() && expr[i] == 'x') {
      power = 1;
      ++i;
      if (i < expr.size() && expr[i] == '^') {
        ++i;
        size_t used = 0;
        power = std::stoul(expr.substr(i), &used);
        i += used;
      }
    } else if (!have_coef) {
      throw Error(ErrorKind::InvalidInput, "cannot parse polynomial term in: " + expr);
    }
    bump(power, sign * coef);
    sign = 1.0;
    skip_ws();
  }
  if (mono.empty()) throw Error(ErrorKind::InvalidInput, "empty polynomial: " + expr);
  return ChebPoly::from_monomial(mono, {-1.0, 1.0});
}

struct FamilyFlags {
  std::string family = "exp";
  double beta = 1.0;
  double t = 3.0;
  double kappa = 4.0;
  std::string poly;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "exp | sin | cos | log | inv | custom")
        ->check(CLI::IsMember({"exp", "sin", "cos", "log", "inv", "custom"}));
    cmd->add_option("--beta", beta, "exp/log parameter");
    cmd->add_option("--t", t, "sin/cos parameter");
    cmd->add_option("--kappa", kappa, "inverse-family parameter");
    cmd->add_option("--poly", poly, "custom polynomial target, e.g. \"x^2\"");
  }

  TargetFunction build() const {
    if (family == "exp") return TargetFunction::exp_family(beta);
    if (family == "sin") return TargetFunction::sin_family(t);
    if (family == "cos") return TargetFunction::cos_family(t);
    if (family == "log") return TargetFunction::log_family(beta);
    if (family == "inv") return TargetFunction::inverse_family(kappa);
    if (poly.empty())
      throw Error(ErrorKind::InvalidInput, "custom family requires --poly");
    return TargetFunction::from_poly(parse_poly_expr(poly), Domain(Interval{-1.0, 1.0}));
  }

  std::string echo() const {
    std::ostringstream os;
    os << "family=" << family;
    if (family == "exp" || family == "log") os << " beta=" << beta;
    if (family == "sin" || family == "cos") os << " t=" << t;
    if (family == "inv") os << " kappa=" << kappa;
    if (family == "custom") os << " poly=\"" << poly << "\"";
    return os.str();
  }
};

void write_header(std::ostream& os, const std::string& cmd, const std::string& config,
                  std::uint64_t seed, char comment = '#') {
  os << comment << " " << kVersion << "\n";
  os << comment << " command: " << cmd << "\n";
  os << comment << " config: " << config << "\n";
  os << comment << " seed: " << seed << "\n";
}

void write_svg_plot(const std::string& path, const TargetFunction& f, const MinimaxResult& mr,
                    const std::vector<RatioRow>& table) {
  std::ofstream svg(resolve_out(path));
  if (!svg) throw Error(ErrorKind::InvalidInput, "cannot open plot file " + path);
  const int W = 800, Hh = 300;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << 2 * Hh
      << "'>\n";
  // Error curve over the domain hull.
  Interval hull = f.domain().hull();
  double E = std::max(mr.error, 1e-300);
  svg << "<text x='10' y='18' font-size='13'>equioscillation error, degree "
      << mr.degree << " (scaled by E)</text>\n<polyline fill='none' stroke='black' points='";
  for (int i = 0; i <= 600; ++i) {
    double x = hull.lo + hull.length() * i / 600.0;
    double y = f.domain().contains(x) ? (f(x) - mr.best_poly(x)) / E : 0.0;
    svg << (20 + (W - 40.0) * i / 600.0) << "," << (Hh / 2.0 - 0.4 * Hh * y) << " ";
  }
  svg << "'/>\n";
  for (double xr : mr.ref_points) {
    double px = 20 + (W - 40.0) * (xr - hull.lo) / hull.length();
    svg << "<circle cx='" << px << "' cy='" << Hh / 2.0 << "' r='2.5' fill='red'/>\n";
  }
  // Ratio decay, log10 E_d by degree.
  svg << "<text x='10' y='" << Hh + 18 << "' font-size='13'>log10 E_d</text>\n";
  svg << "<polyline fill='none' stroke='blue' points='";
  double lmin = 0, lmax = -300;
  for (const RatioRow& r : table)
    if (!r.failed && r.E > 0) {
      lmin = std::min(lmin, std::log10(r.E));
      lmax = std::max(lmax, std::log10(r.E));
    }
  if (lmax <= lmin) lmax = lmin + 1;
  for (const RatioRow& r : table) {
    if (r.failed) continue;
    double lx = 20 + (W - 40.0) * (r.d - table.front().d) /
                         std::max(1, table.back().d - table.front().d);
    double ly = std::log10(std::max(r.E, 1e-300));
    svg << lx << "," << (2 * Hh - 20 - (Hh - 40.0) * (ly - lmin) / (lmax - lmin)) << " ";
  }
  svg << "'/>\n</svg>\n";
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read circuit file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return circuit_from_json(ss.str());
}

int run_approx(const FamilyFlags& fam, int dmax, double eps, const std::string& out,
               const std::string& format, const std::string& plot) {
  TargetFunction f = fam.build();
  std::vector<RatioRow> table = error_ratio_table(f, dmax);
  int show_d = std::min(dmax, std::max(4, dmax / 2));
  MinimaxResult mr = remez(f, show_d);

  std::ofstream file;
  std::ostream& os = *open_out(file, out);
  std::ostringstream cfg;
  cfg << fam.echo() << " dmax=" << dmax;
  if (eps > 0) cfg << " eps=" << eps;

  if (format == "json") {
    nlohmann::json j;
    j["tool"] = kVersion;
    j["config"] = cfg.str();
    j["rows"] = nlohmann::json::array();
    for (const RatioRow& r : table)
      j["rows"].push_back({{"d", r.d},
                           {"E", r.E},
                           {"ratio", r.ratio},
                           {"certified", r.certified},
                           {"failed", r.failed}});
    if (eps > 0) {
      ApproxDegreeResult ad = approximate_degree(f, eps);
      j["approx_degree"] = {{"epsilon", eps}, {"degree", ad.degree}, {"E_d", ad.E_d},
                            {"E_dm1", ad.E_dm1}};
    }
    os << j.dump(2) << "\n";
  } else {
    write_header(os, "approx", cfg.str(), 0);
    if (eps > 0) {
      ApproxDegreeResult ad = approximate_degree(f, eps);
      os << "# approx_degree(eps=" << fmt(eps) << ") = " << ad.degree
         << "  E_d=" << fmt(ad.E_d) << "  E_dm1=" << fmt(ad.E_dm1) << "\n";
    }
    os << "d,E_d,ratio,certified\n";
    for (const RatioRow& r : table) {
      if (r.failed)
        os << r.d << ",FAILED,(" << r.error << "),false\n";
      else
        os << r.d << "," << fmt(r.E) << "," << fmt(r.ratio) << ","
           << (r.certified ? "true" : "false") << "\n";
    }
  }
  if (!plot.empty()) write_svg_plot(plot, f, mr, table);
  return 0;
}

int run_reduce(const FamilyFlags& fam, double eps, const std::string& circuit_path, int sweep,
               int qubits, int gates, std::uint64_t seed, const std::string& out) {
  TargetFunction f = fam.build();
  std::ofstream file;
  std::ostream& os = *open_out(file, out);
  std::ostringstream cfg;
  cfg << fam.echo() << " eps=" << eps;
  if (!circuit_path.empty()) cfg << " circuit=" << circuit_path;
  else cfg << " sweep=" << sweep << " qubits=" << qubits << " gates=" << gates;
  write_header(os, "reduce", cfg.str(), seed);
  os << "trial,d,eta,eta_prime,lhs,predicted,bound,verdict\n";

  bool all_pass = true;
  auto run_one = [&](const Circuit& c, int trial) {
    ReductionBundle bundle = assemble_reduction(f, eps, c);
    Error2Verdict v = verify_error2(bundle);
    os << trial << "," << bundle.d << "," << fmt(bundle.eta) << "," << fmt(bundle.eta_prime)
       << "," << fmt(v.lhs) << "," << fmt(v.predicted) << "," << fmt(v.bound) << ","
       << (v.pass ? "pass" : "FAIL") << "\n";
    all_pass = all_pass && v.pass;
    return bundle;
  };

  if (!circuit_path.empty()) {
    ReductionBundle bundle = run_one(load_circuit(circuit_path), 0);
    std::string bpath = resolve_out("bundle.json");
    std::ofstream bf(bpath);
    bf << bundle_to_json(bundle) << "\n";
    os << "# bundle: " << bpath << "\n";
  } else {
    for (int t = 0; t < sweep; ++t)
      run_one(random_circuit(qubits, gates, seed + static_cast<std::uint64_t>(t)), t);
  }
  return all_pass ? 0 : 1;
}

int run_dqc1(const std::string& circuit_path, long shots, const std::string& shots_sweep,
             std::uint64_t seed, bool imag, const std::string& out) {
  Circuit c = load_circuit(circuit_path);
  std::ofstream file;
  std::ostream& os = *open_out(file, out);
  std::ostringstream cfg;
  cfg << "circuit=" << circuit_path << " shots=" << shots << (imag ? " imag" : "");
  write_header(os, "dqc1", cfg.str(), seed);
  TracePart part = imag ? TracePart::Imag : TracePart::Real;
  os << "shots,estimate,std_error,exact,abs_error\n";
  std::vector<long> plan;
  if (!shots_sweep.empty()) {
    std::stringstream ss(shots_sweep);
    std::string tok;
    while (std::getline(ss, tok, ',')) plan.push_back(std::stol(tok));
  } else {
    plan.push_back(shots);
  }
  for (long s : plan) {
    TraceEstimate est = dqc1_sample(c, s, seed, part);
    os << s << "," << fmt(est.mean) << "," << fmt(est.std_error) << "," << fmt(*est.exact) << ","
       << fmt(std::abs(est.mean - *est.exact)) << "\n";
  }
  return 0;
}

int run_forrelation(int n, int k, const std::string& oracle_path, std::uint64_t seed,
                    bool check_dense, const std::string& out) {
  std::vector<OracleString> oracles;
  if (!oracle_path.empty()) {
    std::ifstream in(oracle_path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot read oracle file " + oracle_path);
    nlohmann::json j;
    in >> j;
    for (const auto& jo : j.at("oracles")) {
      OracleString o;
      o.n = n;
      if (jo.is_string()) o = OracleString::from_hex(n, jo.get<std::string>());
      else {
        o.signs = jo.get<std::vector<int>>();
        if (o.signs.size() != (1ull << n)) throw LengthMismatchError("oracle length != 2^n");
      }
      oracles.push_back(std::move(o));
    }
  } else {
    for (int i = 0; i < k; ++i)
      oracles.push_back(OracleString::random(n, seed + static_cast<std::uint64_t>(i)));
  }
  std::ofstream file;
  std::ostream& os = *open_out(file, out);
  std::ostringstream cfg;
  cfg << "n=" << n << " k=" << oracles.size()
      << (oracle_path.empty() ? " oracles=random" : " oracles=" + oracle_path);
  write_header(os, "forrelation", cfg.str(), seed);
  double fast = trace_k(oracles, n);
  os << "trace_k = " << fmt(fast) << "\n";
  if (check_dense) {
    double dense = trace_k_dense(oracles, n);
    os << "dense    = " << fmt(dense) << "\n";
    os << "agreement = " << fmt(std::abs(fast - dense)) << "\n";
  }
  return 0;
}

int run_baseline(const std::string& s_list, const std::string& k_list, long dim, long samples,
                 std::uint64_t seed, const std::string& bundle_path, const std::string& out) {
  std::ofstream file;
  std::ostream& os = *open_out(file, out);

  if (!bundle_path.empty()) {
    // Re-estimate the bundle's normalized trace of P*_{d-1}(A) through the
    // sparse oracles and compare with the exact eigensolve.
    std::ifstream in(bundle_path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot read bundle file " + bundle_path);
    nlohmann::json j;
    in >> j;
    Circuit c = circuit_from_json(j.at("circuit").dump());
    auto av = j.at("jacobi").at("a").get<std::vector<double>>();
    auto bv = j.at("jacobi").at("b").get<std::vector<double>>();
    Eigen::VectorXd a = Eigen::Map<Eigen::VectorXd>(av.data(), av.size());
    Eigen::VectorXd b = Eigen::Map<Eigen::VectorXd>(bv.data(), bv.size());
    ClockHamiltonian H(c, a, b);
    auto ref = j.at("p_star").at("ref_interval").get<std::vector<double>>();
    ChebPoly p(j.at("p_star").at("cheb_coeffs").get<std::vector<double>>(),
               Interval{ref[0], ref[1]});
    write_header(os, "baseline", "bundle=" + bundle_path + " samples=" + std::to_string(samples),
                 seed);
    SparseOracle oracle = wrap_dense(H.dense());
    WalkEstimate est = walk_trace_poly(oracle, p, samples, seed);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H.dense(), Eigen::EigenvaluesOnly);
    double exact = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) exact += p(es.eigenvalues()[i]);
    exact /= static_cast<double>(H.dim());
    os << "estimate,std_error,exact,queries_per_sample,sparsity\n";
    os << fmt(est.value) << "," << fmt(est.std_error) << "," << fmt(exact) << ","
       << fmt(est.queries_per_sample) << "," << oracle.sparsity() << "\n";
    return 0;
  }

  auto parse_ints = [](const std::string& text) {
    std::vector<int> vals;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stoi(tok));
    return vals;
  };
  std::vector<ScalingRow> rows =
      query_scaling_report(parse_ints(s_list), parse_ints(k_list), dim, samples, seed);
  write_header(os, "baseline",
               "s=" + s_list + " k=" + k_list + " D=" + std::to_string(dim) +
                   " samples=" + std::to_string(samples),
               seed);
  os << "s,k,D,samples,mean,stderr,queries_per_sample\n";
  for (const ScalingRow& r : rows)
    os << r.s << "," << r.k << "," << r.D << "," << r.samples << "," << fmt(r.mean) << ","
       << fmt(r.stderr_) << "," << fmt(r.queries_per_sample) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normalized-trace estimation toolkit"};
  app.set_version_flag("--version", kVersion);
  int threads = 1;
  app.add_option("--threads", threads, "worker-thread cap")->capture_default_str();

  // approx
  auto* approx = app.add_subcommand("approx", "minimax approximation tables");
  FamilyFlags afam;
  afam.attach(approx);
  int dmax = 16;
  double aeps = 0.0;
  std::string aout, aformat = "csv", aplot;
  approx->add_option("--dmax", dmax, "table limit")->capture_default_str();
  approx->add_option("--eps", aeps, "also report the approximate degree at this accuracy");
  approx->add_option("--out", aout, "output file (default stdout)");
  approx->add_option("--format", aformat, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  approx->add_option("--plot", aplot, "write an SVG of the error curve and decay");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "circuit-to-Hamiltonian reduction + verdict");
  FamilyFlags rfam;
  rfam.attach(reduce);
  double reps = 1.0 / 3.0;
  std::string rcircuit, rout;
  int rsweep = 0, rqubits = 4, rgates = 3;
  std::uint64_t rseed = 1;
  reduce->add_option("--eps", reps, "target accuracy")->capture_default_str();
  reduce->add_option("--circuit", rcircuit, "circuit JSON file");
  reduce->add_option("--sweep", rsweep, "run N random circuits instead of a file");
  reduce->add_option("--qubits", rqubits, "sweep: qubit count")->capture_default_str();
  reduce->add_option("--gates", rgates, "sweep: gate count")->capture_default_str();
  reduce->add_option("--seed", rseed, "sweep seed")->capture_default_str();
  reduce->add_option("--out", rout, "output file (default stdout)");

  // dqc1
  auto* dqc1 = app.add_subcommand("dqc1", "clean-qubit trace estimation");
  std::string dcircuit, dsweep, dout;
  long dshots = 10000;
  std::uint64_t dseed = 1;
  bool dimag = false;
  dqc1->add_option("--circuit", dcircuit, "circuit JSON file")->required();
  dqc1->add_option("--shots", dshots, "shot count")->capture_default_str();
  dqc1->add_option("--shots-sweep", dsweep, "comma list of shot counts");
  dqc1->add_option("--seed", dseed, "sampler seed")->capture_default_str();
  dqc1->add_flag("--imag", dimag, "estimate the imaginary part");
  dqc1->add_option("--out", dout, "output file (default stdout)");

  // forrelation
  auto* forr = app.add_subcommand("forrelation", "alternating oracle/Hadamard trace");
  int fn = 6, fk = 3;
  std::string foracles, fout;
  std::uint64_t fseed = 1;
  bool fdense = false;
  forr->add_option("--n", fn, "qubit count")->capture_default_str();
  forr->add_option("--k", fk, "oracle count (random mode)")->capture_default_str();
  forr->add_option("--oracles", foracles, "JSON file with {\"oracles\": [...]} (+-1 or hex)");
  forr->add_option("--seed", fseed, "random-oracle seed")->capture_default_str();
  forr->add_flag("--check-dense", fdense, "cross-check against the dense path");
  forr->add_option("--out", fout, "output file (default stdout)");

  // baseline
  auto* base = app.add_subcommand("baseline", "classical sparse-oracle walk estimator");
  std::string bs = "2,4,8", bk = "2,3,4,5,6", bbundle, bout;
  long bdim = 1024, bsamples = 4;
  std::uint64_t bseed = 7;
  base->add_option("--s-values", bs, "comma list of sparsities")->capture_default_str();
  base->add_option("--k-values", bk, "comma list of degrees")->capture_default_str();
  base->add_option("--dim", bdim, "matrix dimension")->capture_default_str();
  base->add_option("--samples", bsamples, "samples per cell")->capture_default_str();
  base->add_option("--seed", bseed, "sampler seed")->capture_default_str();
  base->add_option("--bundle", bbundle, "bundle JSON: estimate tr P*(A)/dim vs exact");
  base->add_option("--out", bout, "output file (default stdout)");

  app.require_subcommand(1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Eigen::setNbThreads(threads);
  try {
    if (*approx) return run_approx(afam, dmax, aeps, aout, aformat, aplot);
    if (*reduce) return run_reduce(rfam, reps, rcircuit, rsweep, rqubits, rgates, rseed, rout);
    if (*dqc1) return run_dqc1(dcircuit, dshots, dsweep, dseed, dimag, dout);
    if (*forr) return run_forrelation(fn, fk, foracles, fseed, fdense, fout);
    if (*base) return run_baseline(bs, bk, bdim, bsamples, bseed, bbundle, bout);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InvalidInput: return 2;
      case ErrorKind::Precondition: return 3;
      case ErrorKind::NoConvergence: return 4;
      case ErrorKind::TooLarge: return 3;
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
