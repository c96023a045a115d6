#pragma once

#include <stdexcept>

namespace sphereavg {

// A configured enumeration/compute limit was exceeded (CLI exit status 3).
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value left the representable range of the wide fixed-width integers
// (CLI exit status 3).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Quadrature failed to reach the requested tolerance under the grid cap.
class NonconvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant was violated (CLI exit status 4).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sphereavg
