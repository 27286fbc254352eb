#pragma once

#include <stdexcept>
#include <string>

namespace szq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different fields, or a value is outside its field.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// No order was found within the hint set or the iteration bound.
class OrderNotFoundError : public Error {
 public:
  using Error::Error;
};

/// Group enumeration grew past the caller's limit.
class LimitExceededError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed its certification step (e.g. generator closure).
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (profile JSON, stats JSON, CLI values).
class InputError : public Error {
 public:
  using Error::Error;
};

class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class AmbiguityError : public Error {
 public:
  using Error::Error;
};

/// Internal invariant violated; indicates a bug rather than bad input.
class AssertionError : public Error {
 public:
  using Error::Error;
};

}  // namespace szq
