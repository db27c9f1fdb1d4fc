#pragma once

#include <stdexcept>

namespace snarkdom {

// Raised when an operation is requested outside its documented feasibility
// range.  Ranges are enforced, never silently exceeded.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace snarkdom
