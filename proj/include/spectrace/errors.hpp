#pragma once

#include <stdexcept>
#include <string>

namespace spectrace {

// Failure categories, grouped by how callers recover.  InvalidInput maps to
// CLI exit code 2, Precondition to 3, NoConvergence to 4.
enum class ErrorKind {
  InvalidInput,   // malformed data: bad circuit file, length mismatch, ...
  Precondition,   // a stated contract was violated before work started
  NoConvergence,  // iteration exhausted without meeting its tolerance
  TooLarge,       // problem size beyond the dense-path limits
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string what) : std::runtime_error(std::move(what)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define SPECTRACE_DEFINE_ERROR(Name, Kind)                     \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& msg)                      \
        : Error(ErrorKind::Kind, std::string(#Name ": ") + msg) {} \
  }

SPECTRACE_DEFINE_ERROR(NoConvergenceError, NoConvergence);
SPECTRACE_DEFINE_ERROR(DegenerateReferencesError, Precondition);
SPECTRACE_DEFINE_ERROR(SingularSystemError, Precondition);
SPECTRACE_DEFINE_ERROR(DegenerateCertificateError, Precondition);
SPECTRACE_DEFINE_ERROR(SearchExceededError, NoConvergence);
SPECTRACE_DEFINE_ERROR(OverflowError, Precondition);
SPECTRACE_DEFINE_ERROR(InvalidDiscriminantError, Precondition);
SPECTRACE_DEFINE_ERROR(RatioConditionFailedError, Precondition);
SPECTRACE_DEFINE_ERROR(DegenerateGapError, Precondition);
SPECTRACE_DEFINE_ERROR(TooLargeError, TooLarge);
SPECTRACE_DEFINE_ERROR(NotUnitaryError, Precondition);
SPECTRACE_DEFINE_ERROR(LengthMismatchError, InvalidInput);
SPECTRACE_DEFINE_ERROR(DimensionMismatchError, InvalidInput);
SPECTRACE_DEFINE_ERROR(NonPositiveCouplingError, Precondition);
SPECTRACE_DEFINE_ERROR(CircuitTooDeepError, Precondition);
SPECTRACE_DEFINE_ERROR(DomainViolationError, Precondition);
SPECTRACE_DEFINE_ERROR(FactorMismatchError, Precondition);
SPECTRACE_DEFINE_ERROR(NotHermitianError, Precondition);

#undef SPECTRACE_DEFINE_ERROR

}  // namespace spectrace
