#pragma once

#include <stdexcept>

namespace wimlab {

// A caller-supplied value breaks a documented precondition or invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed its configured search budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed. This is a bug, not bad input; callers are
// expected to let it propagate.
class StructureViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wimlab
