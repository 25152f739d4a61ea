#ifndef HCONV_ERRORS_HPP
#define HCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hconv {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An input left the domain where a function or check is defined.
class DomainError : public Error {
  using Error::Error;
};

/// Matrix/vector dimensions are incompatible.
class DimensionError : public Error {
  using Error::Error;
};

/// An iterative routine failed to converge within its budget.
class ConvergenceError : public Error {
  using Error::Error;
};

/// Bad configuration: unknown name, invalid suite parameters, etc.
class ConfigError : public Error {
  using Error::Error;
};

}  // namespace hconv

#endif
