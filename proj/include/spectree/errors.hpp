#pragma once

#include <stdexcept>

namespace spectree {

// Input data failed validation: malformed edge list, duplicate or
// out-of-range edges, disconnected graph, and the like.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Removing the Dirichlet pendants left no vertices behind.
struct EmptyInteriorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroPolynomialError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A scan/bisection driver failed to reach its tolerance.
struct ConvergenceFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two eigenvalue clusters landed closer than the resolution tolerance,
// or the observed cluster structure contradicts the expected counts.
struct ClusterAmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AmbiguousInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace spectree
