#pragma once

#include <stdexcept>

namespace hibi {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad input data or a violated precondition. CLI exit code 1.
struct DomainError : Error {
  using Error::Error;
};

/// A configured resource cap was reached before the computation finished.
/// CLI exit code 2.
struct CapExceeded : Error {
  using Error::Error;
};

struct CycleError : DomainError {
  using DomainError::DomainError;
};
struct DuplicateElement : DomainError {
  using DomainError::DomainError;
};
struct UnknownElement : DomainError {
  using DomainError::DomainError;
};
struct NotDownClosed : DomainError {
  using DomainError::DomainError;
};
struct StarViolation : DomainError {
  using DomainError::DomainError;
};
struct BadParameters : DomainError {
  using DomainError::DomainError;
};
struct UnknownTag : DomainError {
  using DomainError::DomainError;
};
struct ParseError : DomainError {
  using DomainError::DomainError;
};

/// A level labeling failed its own feasibility constraints. Indicates a bug
/// in the labeling construction, not a user error.
struct InfeasibleLabeling : DomainError {
  using DomainError::DomainError;
};

/// A family constructor produced a poset whose re-analysis disagrees with
/// the requested invariants; the message carries the offending poset.
struct ConstructionMismatch : DomainError {
  using DomainError::DomainError;
};

/// Two computations that are provably equal disagreed. Always a bug; the
/// message carries both certificates.
struct InternalDisagreement : DomainError {
  using DomainError::DomainError;
};

struct SizeCapExceeded : CapExceeded {
  using CapExceeded::CapExceeded;
};
struct SearchCapExceeded : CapExceeded {
  using CapExceeded::CapExceeded;
};
struct OracleCapExceeded : CapExceeded {
  using CapExceeded::CapExceeded;
};

}  // namespace hibi
