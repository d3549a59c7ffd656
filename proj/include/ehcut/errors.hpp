#ifndef EHCUT_ERRORS_HPP
#define EHCUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ehcut {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter outside its admissible range (s < 1, h > s, s > t, ...).
struct InvalidParams : Error {
    using Error::Error;
};

// Construction would exceed the configured bit guard.
struct InstanceTooLarge : Error {
    using Error::Error;
};

// A vertex pair that is not an edge of the graph at hand.
struct NotAnEdge : Error {
    using Error::Error;
};

// Bit strings of unequal length fed to a distance computation.
struct LengthMismatch : Error {
    using Error::Error;
};

// Decomposition along a dimension that would leave a degenerate half.
struct UnsupportedDecomposition : Error {
    using Error::Error;
};

// A vertex map that is not a bijection between the two vertex sets.
struct NotABijection : Error {
    using Error::Error;
};

// Brute-force enumeration whose projected candidate count exceeds the budget.
struct OracleInfeasible : Error {
    using Error::Error;
};

} // namespace ehcut

#endif
