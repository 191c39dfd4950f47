#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nccalc {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematically meaningful refusal: the input lies outside an
/// operation's domain (division by zero, a pole, a non-invertible matrix).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
  using DomainError::DomainError;
};

class PoleAtZero : public DomainError {
 public:
  PoleAtZero() : DomainError("pole at hbar = 0") {}
};

class SingularInverse : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonInvertibleCentral : public DomainError {
 public:
  NonInvertibleCentral() : DomainError("central 2x2 system is singular") {}
};

class NonCommutingEntries : public DomainError {
 public:
  NonCommutingEntries() : DomainError("matrix entries do not pairwise commute") {}
};

class SingularDeterminant : public DomainError {
 public:
  SingularDeterminant() : DomainError("determinant vanishes") {}
};

class CannotInvert : public DomainError {
 public:
  explicit CannotInvert(const std::string& reason) : DomainError("cannot invert: " + reason) {}
};

class ZeroDenominator : public DomainError {
 public:
  ZeroDenominator() : DomainError("zero denominator in fraction") {}
};

class NonUnitVector : public DomainError {
 public:
  NonUnitVector() : DomainError("direction vector is not a unit vector") {}
};

class IrregularTestFunction : public DomainError {
 public:
  using DomainError::DomainError;
};

class RelationViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : Error(what), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace nccalc
