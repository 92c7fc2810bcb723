#pragma once

#include <stdexcept>
#include <string>

namespace tqr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group input: bad Cayley table, bad permutation, bad family parameters.
class InvalidGroup : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded (group order, enumeration, search).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A class function failed to decompose into non-negative integer multiplicities.
class NotACharacter : public Error {
 public:
  using Error::Error;
};

/// Floating point certification failed (eigenvalue collisions, orthogonality residuals).
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// Precondition on an argument violated (non-normal subgroup, group mismatch, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace tqr
