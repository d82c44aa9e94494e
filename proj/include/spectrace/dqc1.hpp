#pragma once

#include <cstdint>
#include <optional>

#include "spectrace/circuit.hpp"

namespace spectrace {

struct TraceEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long shots = 0;
  std::optional<double> exact;
};

enum class TracePart { Real, Imag };

// Hadamard-test statistic for the clean-qubit trace experiment: shots
// Bernoulli draws at p0 = 1/2 + part(tr U / 2^n) / 2, estimator 2(p0_hat - 1/2).
// The imaginary part uses the phase-shifted (S^dagger) variant of the test.
// Shot batches derive their streams from (seed, batch), so results are
// reproducible under any batching.
TraceEstimate dqc1_sample(const Circuit& c, long shots, std::uint64_t seed,
                          TracePart part = TracePart::Real);

}  // namespace spectrace
