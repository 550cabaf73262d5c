#pragma once

#include <stdexcept>
#include <string>

namespace zs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation requested within the pole-exclusion radius of a pole.
struct PoleError : Error {
    using Error::Error;
};

// Argument outside the supported working window.
struct RangeError : Error {
    using Error::Error;
};

// The truncation error bound could not be pushed below the requested budget.
struct AccuracyError : Error {
    using Error::Error;
};

// An intermediate quantity left the binary64 range on a direct (non
// log-space) evaluation path.
struct OverflowError : Error {
    using Error::Error;
};

struct NonFiniteSampleError : Error {
    using Error::Error;
};

struct NoConvergenceError : Error {
    using Error::Error;
};

struct NoRootError : Error {
    using Error::Error;
};

}  // namespace zs
