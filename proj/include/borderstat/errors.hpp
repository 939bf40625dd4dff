#pragma once

#include <stdexcept>

namespace borderstat {

// Raised when an exhaustive enumeration would exceed the configured
// word-count budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a requested precision cannot be reached within the
// configured compute budget, or when rendering more digits than the
// error radius justifies.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace borderstat
