#pragma once

#include <stdexcept>
#include <string>

namespace pointfam {

/// Base of every error raised by the library. Messages are meant to be
/// shown to a CLI user as-is.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// alpha*gamma - beta*delta differs from 1 by more than the tolerance.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

class NonPositiveMass : public Error {
 public:
  using Error::Error;
};

/// A (alpha, gamma, delta) slice that no valid parameter set passes through.
class InvalidSlice : public Error {
 public:
  using Error::Error;
};

/// Transmission/reflection denominator vanished; only reachable with
/// inconsistent input.
class SingularDenominator : public Error {
 public:
  using Error::Error;
};

/// The plane-wave matching system could not be solved.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// Two particles coincide, so the configuration is undefined.
class OnBoundary : public Error {
 public:
  using Error::Error;
};

/// Delta-function strength that does not bind.
class NonBinding : public Error {
 public:
  using Error::Error;
};

/// Incidence parameter outside the open interval (0, pi/3).
class GrazingAngle : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (JSON, CSV, ranges).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Generic precondition failure (non-positive wavenumber, bad particle count, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace pointfam
