#pragma once

#include <stdexcept>
#include <string>

namespace irs {

/// Bad argument or precondition violation (invalid discriminant, non-prime, length mismatch).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two ideals from different fields were combined.
class FieldMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An exact integer result would not fit the working width.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A brute-force path was asked to do more work than its scale guard allows,
/// or a table is too short for the requested cutoff.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric evaluation could not reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace irs
