#pragma once

#include <stdexcept>
#include <string>

namespace cusp {

// Malformed or out-of-range input. CLI exit code 2.
struct ParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computed quantity contradicts a theorem it must satisfy. CLI exit code 3.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncation too coarse to decide a valuation or certify a bound. CLI exit code 4.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Division by zero or evaluation at a pole.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cusp
