#pragma once

#include <stdexcept>
#include <string>

namespace mlf {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or invariant-violating input (parse errors, bad instances).
struct validation_error : error {
    using error::error;
};

// Geometric degeneracy the algorithm refuses to handle (all points
// collinear, contractible sleeve, ...).
struct degeneracy_error : error {
    using error::error;
};

// A stated precondition of an operation does not hold.
struct precondition_error : error {
    using error::error;
};

// Exhaustive search would exceed the configured size limits.
struct size_limit_error : error {
    using error::error;
};

// Gadget generator could not realize the requested layout.
struct routing_error : error {
    using error::error;
};

} // namespace mlf
