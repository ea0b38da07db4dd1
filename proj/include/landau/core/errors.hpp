#pragma once

#include <stdexcept>
#include <string>

namespace landau {

struct ConfigInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when mu^{-1/2} is requested on a field without a Gaussian-decay certificate.
struct GuardViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct BoundViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntegerOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

struct BlowupDetected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResolutionExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace landau
