#pragma once

#include <stdexcept>
#include <string>

namespace hmc {

// Raised when two computation routes that must agree exactly disagree,
// or when a coefficient that must be a non-negative integer is not.
// Always indicates a bug, never bad user input.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hmc
