#pragma once

#include <stdexcept>
#include <string>

namespace rwls {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad knots, bad sizes, out-of-range parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A point lies outside the parametric domain of a space.
class DomainError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Base for numerical failures (singular systems, blow-up guards, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Least-squares system without full column rank, or singular regularized system.
class RankDeficientError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// C(m, n) exceeds the subset enumeration cap.
class CombinatorialCapError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Adaptive refinement stopped adding degrees of freedom.
class StagnationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Refinement request for a cell outside its level's subdomain.
class NestingError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// File could not be read or written, or its content is malformed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rwls
