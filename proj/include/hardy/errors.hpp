#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Base class for every failure raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different variable lists, wrong arity, bad index.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A value outside the domain of an operation (fractional power of a
/// non-positive base, p <= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition (inadmissible test function,
/// singular test point, wrong weight mode).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Non-finite value encountered while integrating or evaluating.
class NumericError : public Error {
 public:
  using Error::Error;
};

class SamplingError : public Error {
 public:
  using Error::Error;
};

class DegenerateBoundaryError : public Error {
 public:
  using Error::Error;
};

}  // namespace hardy
