#pragma once

#include <stdexcept>

namespace qcorr {

// Inputs that fail structural or physicality checks (bad shapes,
// unphysical parameters, unsupported channel/state combinations).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical routine could not meet its accuracy contract.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qcorr
