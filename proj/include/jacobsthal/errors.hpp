#pragma once

#include <stdexcept>
#include <string>

namespace jacobsthal {

// Precondition violated by the caller (bad index, zero denominator, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A closed form has a pole at the requested argument; the oracle still applies.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Strided sum with 3 | m, where the closed form divides by zero.
class DegenerateStrideError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Power-series division by a series with zero constant term.
class NotUnitError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An element of Q(w) that should be rational carries a nonzero w-part.
// Always an internal inconsistency, never a user error.
class NonRealResidueError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace jacobsthal
