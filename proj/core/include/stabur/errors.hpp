#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabur {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position()` is a 0-based character offset for
/// Pauli strings and a 1-based line number for files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands with mismatched qubit/vertex counts.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input that violates a documented precondition (non-Hermitian generator,
/// dependent generators, invalid distribution, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Mathematical hypothesis of a relation not satisfied (non-concave entropy,
/// non-anticommuting observables, infeasible targets).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Requested size exceeds a configured limit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A consistency check that can only fail because of a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace stabur
