#pragma once

#include <stdexcept>
#include <string>

namespace schwarzian {

/// Raised when an argument lies outside the mathematical domain of an
/// operation (parameter pair outside -1 <= B < A <= 1, a point off the open
/// unit disk, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when the inputs are valid but the requested branch or construction
/// does not apply to them.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace schwarzian
