#pragma once

#include <stdexcept>
#include <string>

namespace skewhook {

// Invalid input values: malformed partitions, cells outside a diagram.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An operation was called on an object that does not satisfy its contract
// (inactive cell, non-minimal tableau, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The strip machinery only handles connected skew shapes.
class UnsupportedShape : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant violations. These signal a bug or a broken identity and
// must never fire on valid input.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skewhook
