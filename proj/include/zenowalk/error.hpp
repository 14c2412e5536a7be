#pragma once

#include <stdexcept>
#include <string>

namespace zenowalk {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite angle, bad size, malformed schedule or similar caller mistake.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A shift would leave the lattice allocated up front.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Operation applied to a state that cannot support it (e.g. zero norm).
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// The measure-and-renormalize map does not exist when survival is zero.
class UndefinedConditionalMap : public Error {
 public:
  using Error::Error;
};

class OracleTooLarge : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

}  // namespace zenowalk
