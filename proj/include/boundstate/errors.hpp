#pragma once

#include <stdexcept>
#include <string>

namespace boundstate {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A radial or moment integral that does not converge at ε = 0.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested expansion depth or polygamma order beyond what is implemented.
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operator asked for a state where only the D-dimensional evaluation makes sense.
struct RequiresDimregError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unknown operator / bracket tag.
struct CatalogError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical solver or quadrature failed to reach tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Singular Γ argument in a Fourier kernel.
struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariant: a derivation bug, never a user error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace boundstate
