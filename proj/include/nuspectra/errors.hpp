#ifndef NUSPECTRA_ERRORS_HPP
#define NUSPECTRA_ERRORS_HPP

#include <stdexcept>

namespace nuspectra {

// A quadratic handed to sqrt_perfect_square whose discriminant is not zero
// within tolerance.
struct NotPerfectSquare : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The discriminant of the under-radical quadratic is constant in k, so no
// finite set of k candidates exists.
struct DegenerateForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Secant iteration on the quantization condition failed to converge.
struct QuantizationDivergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sigma(s) is not of the c*s*(1-q*s) shape with two distinct roots.
struct UnsupportedSigma : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Potential denominator vanished at the requested coordinate.
struct PoleAtR : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nuspectra

#endif
