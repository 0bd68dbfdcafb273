#pragma once

#include <stdexcept>
#include <string>

namespace ellcirc {

// Exception hierarchy. Every error raised by the library derives from Error
// so callers (the CLI in particular) can map the category to an exit status.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the documented domain (negative radius, modulus > 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was invoked for a radius regime where it is undefined,
/// e.g. the self-intersection angle of the inner offset outside its case.
class CaseError : public Error {
 public:
  using Error::Error;
};

/// The lattice is too dense for the one-circle hitting assumption.
class AssumptionError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity violates an identity it must satisfy.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The intersection oracle could not resolve a pose (odd crossing count).
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// A pose is tangent within tolerance, so no distinct crossing count exists.
class DegeneratePoseError : public Error {
 public:
  using Error::Error;
};

/// A point lies too close to an offset curve for the region picture to decide.
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

}  // namespace ellcirc
