#pragma once

#include <stdexcept>
#include <string>

namespace indgap {

// Bad user-facing input (graph files, spec strings, JSON payloads). CLI maps
// this to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative numerics failed to settle. CLI maps this to exit code 4.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested size outside supported caps (graphs beyond 64 vertices). CLI maps
// this to exit code 3.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace indgap
