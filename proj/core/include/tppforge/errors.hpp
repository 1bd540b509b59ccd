#pragma once

#include <stdexcept>

namespace tppforge {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Out-of-range element index, mismatched group orders, inconsistent
// matrix labels, bad configuration values.
struct ArgumentError : Error {
  using Error::Error;
};

// Operation undefined on the given value (e.g. right quotient of the
// empty set).
struct DomainError : Error {
  using Error::Error;
};

// A group table or group specification failed validation. The message
// names the first violated axiom and witness indices.
struct ConstructionError : Error {
  using Error::Error;
};

// A text input (Cayley table, triple or matrix file) could not be
// parsed; messages carry file and line information.
struct ParseError : ConstructionError {
  using ConstructionError::ConstructionError;
};

// An operation was called on inputs violating its stated precondition,
// e.g. normalizing or realizing a triple that fails the TPP check.
struct PreconditionError : Error {
  using Error::Error;
};

// Checked 64-bit integer arithmetic overflowed.
struct ArithmeticError : Error {
  using Error::Error;
};

// A request exceeded the configured enumeration cap.
struct CapError : ArgumentError {
  using ArgumentError::ArgumentError;
};

}  // namespace tppforge
