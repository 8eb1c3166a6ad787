#pragma once

#include <stdexcept>

namespace excivib {

// Physically meaningless input (non-positive frequency, zero mass, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A parameter bundle violated a type invariant; the message names every
// offending field.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Basis or matrix would exceed a configured size cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative numerical routine failed to meet its tolerance.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands with mismatched dimensions.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace excivib
