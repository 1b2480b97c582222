#pragma once

#include <stdexcept>
#include <string>

namespace hadj {

// Raised when an operation's precondition on its mathematical input fails
// (nonparity pair, index out of range, ill-typed composite, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Exhaustive enumeration refused because the search space is too large.
class CapacityError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace hadj
