#pragma once

#include <stdexcept>
#include <string>

namespace filiform {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: JSON, CLI arguments, out-of-range parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition of a mathematical operation does not hold.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class FactorizationOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace filiform
