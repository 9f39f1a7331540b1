#pragma once

#include <stdexcept>
#include <string>

namespace bellctx {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input vector has (numerically) zero norm and cannot be normalized.
class ZeroVector : public Error {
 public:
  using Error::Error;
};

// Operands have incompatible or unsupported dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Matrix fails the Hermiticity check.
class NotHermitian : public Error {
 public:
  using Error::Error;
};

// State or amplitude triple is not unit-norm within tolerance.
class NotNormalized : public Error {
 public:
  using Error::Error;
};

// Two-qubit state has an antisymmetric component above tolerance.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

// Direction vector is not unit-norm within tolerance.
class NotUnit : public Error {
 public:
  using Error::Error;
};

// Concurrence argument outside [0, 1].
class InvalidConcurrence : public Error {
 public:
  using Error::Error;
};

// Scalar argument outside its documented interval.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

// Multi-start search still improving when the restart budget ran out.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

// Observables passed as a jointly measurable pair do not commute.
class NotCommuting : public Error {
 public:
  using Error::Error;
};

// Internal numerical consistency check failed (should not happen).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed input file, state spec, or config value.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bellctx
