#include "spectrace/forrelation.hpp"

#include <cmath>

#include "spectrace/errors.hpp"
#include "spectrace/rng.hpp"

namespace spectrace {

OracleString OracleString::all_ones(int n) {
  OracleString o;
  o.n = n;
  o.signs.assign(1ull << n, 1);
  return o;
}

OracleString OracleString::random(int n, std::uint64_t seed) {
  OracleString o;
  o.n = n;
  o.signs.resize(1ull << n);
  CounterRng rng(seed, 0x0c1e);
  for (auto& v : o.signs) v = rng.bernoulli(0.5) ? 1 : -1;
  return o;
}

OracleString OracleString::from_hex(int n, const std::string& hex) {
  size_t N = 1ull << n;
  if (hex.size() * 4 < N)
    throw LengthMismatchError("hex string too short for 2^" + std::to_string(n) + " bits");
  OracleString o;
  o.n = n;
  o.signs.resize(N);
  for (size_t i = 0; i < N; ++i) {
    char c = hex[i / 4];
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw Error(ErrorKind::InvalidInput, "bad hex digit in oracle string");
    o.signs[i] = ((v >> (i % 4)) & 1) ? -1 : 1;
  }
  return o;
}

std::string OracleString::to_hex() const {
  std::string out((signs.size() + 3) / 4, '0');
  const char* digits = "0123456789abcdef";
  for (size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == -1) {
      int v = out[i / 4] <= '9' ? out[i / 4] - '0' : out[i / 4] - 'a' + 10;
      v |= 1 << (i % 4);
      out[i / 4] = digits[v];
    }
  }
  return out;
}

namespace {

void check_oracles(const std::vector<OracleString>& oracles, int n) {
  if (oracles.empty()) throw Error(ErrorKind::InvalidInput, "trace_k: need k >= 1 oracles");
  for (const OracleString& o : oracles)
    if (o.signs.size() != (1ull << n))
      throw LengthMismatchError("oracle length != 2^n");
}

// In-place unnormalized Walsh-Hadamard butterfly.
void fwht(Eigen::VectorXd& v) {
  const long N = v.size();
  for (long len = 1; len < N; len <<= 1) {
    for (long i = 0; i < N; i += len << 1) {
      for (long j = i; j < i + len; ++j) {
        double a = v[j], b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
}

}  // namespace

double trace_k(const std::vector<OracleString>& oracles, int n) {
  if (n < 1 || n > 12) throw TooLargeError("trace_k: n must be in [1, 12]");
  check_oracles(oracles, n);
  const long N = 1L << n;
  const int k = static_cast<int>(oracles.size());
  const double scale = std::pow(2.0, -0.5 * n);  // per Hadamard layer

  double acc = 0.0;
  Eigen::VectorXd v(N);
  for (long col = 0; col < N; ++col) {
    v.setZero();
    v[col] = 1.0;
    fwht(v);
    v *= scale;
    for (int j = k - 1; j >= 1; --j) {
      for (long i = 0; i < N; ++i) v[i] *= oracles[j].signs[i];
      fwht(v);
      v *= scale;
    }
    for (long i = 0; i < N; ++i) v[i] *= oracles[0].signs[i];
    acc += v[col];
  }
  return acc / N;
}

Eigen::MatrixXd hadamard_layer(int n) {
  Eigen::MatrixXd H(2, 2);
  double isr2 = 1.0 / std::sqrt(2.0);
  H << isr2, isr2, isr2, -isr2;
  Eigen::MatrixXd out = H;
  for (int i = 1; i < n; ++i) {
    // Kron(H, out): the new qubit takes the most significant index bit, so
    // qubit 0 stays least significant.
    Eigen::MatrixXd next(out.rows() * 2, out.cols() * 2);
    next.topLeftCorner(out.rows(), out.cols()) = isr2 * out;
    next.topRightCorner(out.rows(), out.cols()) = isr2 * out;
    next.bottomLeftCorner(out.rows(), out.cols()) = isr2 * out;
    next.bottomRightCorner(out.rows(), out.cols()) = -isr2 * out;
    out = next;
  }
  return out;
}

double trace_k_dense(const std::vector<OracleString>& oracles, int n) {
  if (n > 8) throw TooLargeError("trace_k_dense: n must be <= 8");
  check_oracles(oracles, n);
  const long N = 1L << n;
  Eigen::MatrixXd H = hadamard_layer(n);
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(N, N);
  for (int j = static_cast<int>(oracles.size()) - 1; j >= 0; --j) {
    Eigen::MatrixXd OH = H;
    for (long r = 0; r < N; ++r) OH.row(r) *= oracles[j].signs[r];
    M = (j == static_cast<int>(oracles.size()) - 1) ? OH : Eigen::MatrixXd(OH * M);
  }
  return M.trace() / static_cast<double>(N);
}

QueryUnitary query_model_unitary(const std::vector<OracleString>& oracles,
                                 const std::vector<Eigen::MatrixXcd>& interleave, int n) {
  if (oracles.size() != interleave.size())
    throw DimensionMismatchError("query_model_unitary: k oracles require k interleaves");
  const long N = 1L << n;
  QueryUnitary out;
  out.matrix = Eigen::MatrixXcd::Identity(N, N);
  out.queries = static_cast<int>(oracles.size());
  for (size_t j = 0; j < oracles.size(); ++j) {
    if (interleave[j].rows() != N || interleave[j].cols() != N)
      throw DimensionMismatchError("interleave unitary has wrong dimension");
    if (oracles[j].signs.size() != static_cast<size_t>(N))
      throw DimensionMismatchError("oracle has wrong dimension");
    Eigen::MatrixXcd step = interleave[j] * out.matrix;
    for (long r = 0; r < N; ++r) step.row(r) *= static_cast<double>(oracles[j].signs[r]);
    out.matrix = std::move(step);
  }
  return out;
}

}  // namespace spectrace
