#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace spectrace {

// Diagonal +-1 oracle over n qubits: O_x |i> = x_i |i>.
struct OracleString {
  int n = 0;
  std::vector<int> signs;  // length 2^n, entries +-1

  static OracleString all_ones(int n);
  static OracleString random(int n, std::uint64_t seed);
  // Hex-packed bits, least significant bit first within each byte;
  // bit 0 -> +1, bit 1 -> -1.
  static OracleString from_hex(int n, const std::string& hex);
  std::string to_hex() const;
};

// (1/N) tr [ O_{x_1} H^n O_{x_2} H^n ... O_{x_k} H^n ], evaluated column by
// column with the fast Walsh-Hadamard transform; H^n is never materialized.
double trace_k(const std::vector<OracleString>& oracles, int n);

// Dense cross-check path via explicit Kronecker powers; n <= 8.
double trace_k_dense(const std::vector<OracleString>& oracles, int n);

struct QueryUnitary {
  Eigen::MatrixXcd matrix;
  int queries = 0;
};

// O_{x_k} U_k ... O_{x_1} U_1; the query count is the number of oracles.
QueryUnitary query_model_unitary(const std::vector<OracleString>& oracles,
                                 const std::vector<Eigen::MatrixXcd>& interleave, int n);

// H^{\otimes n} as a dense matrix (test and cross-check helper).
Eigen::MatrixXd hadamard_layer(int n);

}  // namespace spectrace
