#include "spectrace/circuit.hpp"

#include <cmath>
#include <complex>
#include <set>

#include <nlohmann/json.hpp>

#include "spectrace/errors.hpp"

namespace spectrace {

using json = nlohmann::json;
using cplx = std::complex<double>;

std::string gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::I: return "I";
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::T: return "T";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::CCSIGN: return "CCSIGN";
    case GateKind::RZ: return "RZ";
    case GateKind::RAW: return "RAW";
    case GateKind::DIAG: return "DIAG";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
  static const std::map<std::string, GateKind> table = {
      {"I", GateKind::I},       {"H", GateKind::H},   {"X", GateKind::X},
      {"Z", GateKind::Z},       {"S", GateKind::S},   {"T", GateKind::T},
      {"CNOT", GateKind::CNOT}, {"CZ", GateKind::CZ}, {"CCSIGN", GateKind::CCSIGN},
      {"RZ", GateKind::RZ},     {"RAW", GateKind::RAW}, {"DIAG", GateKind::DIAG}};
  auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorKind::InvalidInput, "unknown gate kind: " + name);
  return it->second;
}

Gate Gate::identity(int q) { return {GateKind::I, {q}}; }
Gate Gate::h(int q) { return {GateKind::H, {q}}; }
Gate Gate::x(int q) { return {GateKind::X, {q}}; }
Gate Gate::z(int q) { return {GateKind::Z, {q}}; }
Gate Gate::s(int q) { return {GateKind::S, {q}}; }
Gate Gate::t(int q) { return {GateKind::T, {q}}; }
Gate Gate::rz(int q, double angle) {
  Gate g{GateKind::RZ, {q}};
  g.angle = angle;
  return g;
}
Gate Gate::cnot(int control, int target) { return {GateKind::CNOT, {control, target}}; }
Gate Gate::cz(int q0, int q1) { return {GateKind::CZ, {q0, q1}}; }
Gate Gate::ccsign(int q0, int q1, int q2) { return {GateKind::CCSIGN, {q0, q1, q2}}; }
Gate Gate::raw_gate(std::vector<int> targets, Eigen::MatrixXcd matrix) {
  Gate g{GateKind::RAW, std::move(targets)};
  g.raw = std::move(matrix);
  return g;
}
Gate Gate::diag_gate(std::vector<int> targets, std::vector<int> signs) {
  Gate g{GateKind::DIAG, std::move(targets)};
  g.diag_signs = std::move(signs);
  return g;
}

Eigen::MatrixXcd Gate::matrix() const {
  const double isr2 = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::I: return Eigen::MatrixXcd::Identity(2, 2);
    case GateKind::H: {
      Eigen::MatrixXcd m(2, 2);
      m << isr2, isr2, isr2, -isr2;
      return m;
    }
    case GateKind::X: {
      Eigen::MatrixXcd m(2, 2);
      m << 0, 1, 1, 0;
      return m;
    }
    case GateKind::Z: {
      Eigen::MatrixXcd m(2, 2);
      m << 1, 0, 0, -1;
      return m;
    }
    case GateKind::S: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
      m(0, 0) = 1;
      m(1, 1) = cplx(0, 1);
      return m;
    }
    case GateKind::T: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
      m(0, 0) = 1;
      m(1, 1) = std::exp(cplx(0, M_PI / 4));
      return m;
    }
    case GateKind::RZ: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
      m(0, 0) = std::exp(cplx(0, -angle / 2));
      m(1, 1) = std::exp(cplx(0, angle / 2));
      return m;
    }
    case GateKind::CNOT: {
      // targets[0] = control = local bit 0, targets[1] = target = local bit 1.
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
      for (int in = 0; in < 4; ++in) {
        int c = in & 1, t = (in >> 1) & 1;
        int out = c | ((t ^ c) << 1);
        m(out, in) = 1;
      }
      return m;
    }
    case GateKind::CZ: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
      m(3, 3) = -1;
      return m;
    }
    case GateKind::CCSIGN: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
      m(7, 7) = -1;
      return m;
    }
    case GateKind::RAW: return raw;
    case GateKind::DIAG: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(diag_signs.size(), diag_signs.size());
      for (size_t i = 0; i < diag_signs.size(); ++i) m(i, i) = diag_signs[i];
      return m;
    }
  }
  throw Error(ErrorKind::InvalidInput, "unhandled gate kind");
}

void Circuit::validate() const {
  if (n_qubits < 1 || n_qubits > 20)
    throw Error(ErrorKind::InvalidInput, "circuit: n_qubits out of range");
  int dense_cap = std::max(3, static_cast<int>(std::ceil(std::log2(std::max(2, n_qubits)))));
  for (const Gate& g : gates) {
    std::set<int> seen;
    for (int q : g.targets) {
      if (q < 0 || q >= n_qubits)
        throw Error(ErrorKind::InvalidInput, "gate target out of range");
      if (!seen.insert(q).second)
        throw Error(ErrorKind::InvalidInput, "gate targets not distinct");
    }
    int expected = -1;
    switch (g.kind) {
      case GateKind::I: case GateKind::H: case GateKind::X: case GateKind::Z:
      case GateKind::S: case GateKind::T: case GateKind::RZ: expected = 1; break;
      case GateKind::CNOT: case GateKind::CZ: expected = 2; break;
      case GateKind::CCSIGN: expected = 3; break;
      case GateKind::RAW: case GateKind::DIAG: expected = g.arity(); break;
    }
    if (g.arity() != expected)
      throw Error(ErrorKind::InvalidInput, "gate arity mismatch for " + gate_kind_name(g.kind));
    if (g.kind == GateKind::RAW) {
      long dim = 1L << g.arity();
      if (g.raw.rows() != dim || g.raw.cols() != dim)
        throw Error(ErrorKind::InvalidInput, "RAW matrix dimension mismatch");
      double res = (g.raw * g.raw.adjoint() - Eigen::MatrixXcd::Identity(dim, dim))
                       .cwiseAbs()
                       .maxCoeff();
      if (res > 1e-10) throw NotUnitaryError("RAW matrix unitarity residual " + std::to_string(res));
    }
    if (g.kind == GateKind::DIAG) {
      if (g.diag_signs.size() != (1ull << g.arity()))
        throw Error(ErrorKind::InvalidInput, "DIAG signs length mismatch");
      for (int v : g.diag_signs)
        if (v != 1 && v != -1)
          throw Error(ErrorKind::InvalidInput, "DIAG entries must be +-1");
    }
    // Diagonal kinds stay 1-sparse at any arity; only dense blocks are capped.
    if (!g.is_diagonal() && g.kind != GateKind::CNOT && g.arity() > dense_cap)
      throw Error(ErrorKind::InvalidInput, "dense gate arity exceeds cap");
  }
}

std::string circuit_to_json(const Circuit& c) {
  json out;
  out["n_qubits"] = c.n_qubits;
  out["gates"] = json::array();
  for (const Gate& g : c.gates) {
    json jg;
    jg["kind"] = gate_kind_name(g.kind);
    jg["targets"] = g.targets;
    if (g.kind == GateKind::RZ) jg["angle"] = g.angle;
    if (g.kind == GateKind::RAW) {
      json re = json::array(), im = json::array();
      for (int i = 0; i < g.raw.rows(); ++i) {
        json rowr = json::array(), rowi = json::array();
        for (int j = 0; j < g.raw.cols(); ++j) {
          rowr.push_back(g.raw(i, j).real());
          rowi.push_back(g.raw(i, j).imag());
        }
        re.push_back(rowr);
        im.push_back(rowi);
      }
      jg["matrix_re"] = re;
      jg["matrix_im"] = im;
    }
    if (g.kind == GateKind::DIAG) jg["diag"] = g.diag_signs;
    out["gates"].push_back(jg);
  }
  return out.dump(2);
}

Circuit circuit_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("circuit JSON parse: ") + e.what());
  }
  try {
    Circuit c;
    c.n_qubits = in.at("n_qubits").get<int>();
    for (const json& jg : in.at("gates")) {
      Gate g;
      g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
      g.targets = jg.at("targets").get<std::vector<int>>();
      if (g.kind == GateKind::RZ) g.angle = jg.at("angle").get<double>();
      if (g.kind == GateKind::RAW) {
        auto re = jg.at("matrix_re").get<std::vector<std::vector<double>>>();
        auto im = jg.at("matrix_im").get<std::vector<std::vector<double>>>();
        long n = static_cast<long>(re.size());
        g.raw.resize(n, n);
        for (long i = 0; i < n; ++i)
          for (long j = 0; j < n; ++j) g.raw(i, j) = cplx(re[i][j], im[i][j]);
      }
      if (g.kind == GateKind::DIAG) g.diag_signs = jg.at("diag").get<std::vector<int>>();
      c.gates.push_back(std::move(g));
    }
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("circuit JSON fields: ") + e.what());
  }
}

Circuit random_circuit(int n_qubits, int n_gates, std::uint64_t seed) {
  CounterRng rng(seed, 0xc1c1);
  Circuit c(n_qubits);
  for (int i = 0; i < n_gates; ++i) {
    int pick = static_cast<int>(rng.next_below(n_qubits >= 2 ? 8 : 6));
    int q = static_cast<int>(rng.next_below(n_qubits));
    switch (pick) {
      case 0: c.gates.push_back(Gate::h(q)); break;
      case 1: c.gates.push_back(Gate::x(q)); break;
      case 2: c.gates.push_back(Gate::z(q)); break;
      case 3: c.gates.push_back(Gate::s(q)); break;
      case 4: c.gates.push_back(Gate::t(q)); break;
      case 5: c.gates.push_back(Gate::rz(q, rng.uniform(0, 2 * M_PI))); break;
      default: {
        int q2 = static_cast<int>(rng.next_below(n_qubits - 1));
        if (q2 >= q) q2++;
        c.gates.push_back(pick == 6 ? Gate::cnot(q, q2) : Gate::cz(q, q2));
        break;
      }
    }
  }
  c.validate();
  return c;
}

}  // namespace spectrace
