#pragma once

#include <stdexcept>
#include <string>

namespace moebius {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable numbers, bad shapes, unknown point labels.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (e.g. an inadmissible tuple,
/// a point that is already infinitely remote).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic that combines opposite infinities (0 * inf, +inf + -inf).
class UndefinedValueError : public Error {
 public:
  using Error::Error;
};

/// Comparison or arithmetic mixing multiplicative and logarithmic values.
class ScaleMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace moebius
