#pragma once

#include <stdexcept>
#include <string>

namespace genshift {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a domain invariant (index out of range, p < 1, NaN entry, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed into the expected structure.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The auxiliary map handed to a generalized-derivation check does not
/// satisfy its own side condition.
class NotADerivation : public Error {
 public:
  using Error::Error;
};

}  // namespace genshift
