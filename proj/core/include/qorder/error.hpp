#pragma once

#include <stdexcept>
#include <string>

namespace qorder {

// Base for every error raised by the library. The subclasses mirror the
// failure categories that callers (notably the CLI exit-code mapping) care
// about.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Qubit count or vector length out of range / mismatched.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Malformed operator: non-Hermitian where Hermitian is required, sites out
// of range, coinciding control sites.
class OperatorError : public Error {
 public:
  using Error::Error;
};

// Invalid function argument not covered by the categories above.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Matrix fails a structural precondition (Hermiticity, unitarity).
class MatrixError : public Error {
 public:
  using Error::Error;
};

// Dense construction requested beyond the supported memory ceiling.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Not enough data for a statistic.
class StatisticsError : public Error {
 public:
  using Error::Error;
};

// Non-finite values encountered during optimization.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace qorder
