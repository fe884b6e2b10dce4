#pragma once

#include <stdexcept>
#include <string>

namespace gabordual {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A derivative order beyond what an evaluator supplies exactly.
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// A numeric parameter (b, N, grid size, ...) outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The window (or its periodization) vanishes where it must not.
class DegenerateWindowError : public Error {
 public:
  using Error::Error;
};

/// A construction hypothesis does not hold for the given inputs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Value of a recovered parametrization requested at an endpoint where it is undefined.
class EndpointUndefinedError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (window/z files, parameter strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gabordual
