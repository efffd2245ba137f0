#pragma once

#include <stdexcept>
#include <string>

namespace ulp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A factorization met a pivot too small to continue.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double pivot_magnitude)
      : Error(what), pivot_magnitude_(pivot_magnitude) {}

  double pivot_magnitude() const noexcept { return pivot_magnitude_; }

 private:
  double pivot_magnitude_;
};

/// A precoder whose raw power is zero cannot be normalized.
class DegeneratePrecoderError : public Error {
 public:
  using Error::Error;
};

/// Invalid user-supplied parameter or configuration value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Bit sequence length not compatible with the symbol mapping.
class FramingError : public Error {
 public:
  using Error::Error;
};

/// Requested record is not present in a result table.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Monte Carlo point aborted by a numerical failure in one realization.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ulp
