#include "spectrace/dqc1.hpp"

#include <algorithm>
#include <cmath>

#include "spectrace/errors.hpp"
#include "spectrace/rng.hpp"
#include "spectrace/unitary.hpp"

namespace spectrace {

TraceEstimate dqc1_sample(const Circuit& c, long shots, std::uint64_t seed, TracePart part) {
  if (shots < 1) throw Error(ErrorKind::InvalidInput, "dqc1_sample: shots must be >= 1");
  std::complex<double> z = normalized_trace(materialize(c));
  double value = part == TracePart::Real ? z.real() : z.imag();
  double p0 = std::clamp(0.5 + 0.5 * value, 0.0, 1.0);

  const long batch = 4096;
  long ones = 0;  // outcomes "measured zero"
  for (long b = 0; b * batch < shots; ++b) {
    CounterRng rng(seed, static_cast<std::uint64_t>(b));
    long count = std::min(batch, shots - b * batch);
    for (long i = 0; i < count; ++i) ones += rng.bernoulli(p0) ? 1 : 0;
  }
  double p_hat = static_cast<double>(ones) / shots;
  double mean = 2.0 * (p_hat - 0.5);

  TraceEstimate est;
  est.mean = mean;
  est.shots = shots;
  est.exact = value;
  if (shots > 1) {
    // Outcomes are +-1; sample variance has the closed form below.
    double var = (1.0 - mean * mean) * static_cast<double>(shots) / (shots - 1);
    est.std_error = std::sqrt(std::max(0.0, var) / shots);
  }
  return est;
}

}  // namespace spectrace
