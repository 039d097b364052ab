#pragma once

#include <stdexcept>
#include <string>

namespace etaforge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text that does not match an expected grammar (brackets, rationals, ranges).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition was violated by the caller.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// ord_p(0) was requested.
class UndefinedValuation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An eta-quotient base does not divide the requested level, or a cusp divisor does not divide N.
class LevelMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A good-reduction formula was applied at a prime of bad reduction.
class BadReduction : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Not enough coefficients were available to decide the question asked.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

/// A value that must be rational came out with a non-constant cyclotomic residue.
class NotRational : public Error {
 public:
  using Error::Error;
};

/// Exact linear system without a unique solution.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// A computed identity failed to hold.
class Mismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace etaforge
