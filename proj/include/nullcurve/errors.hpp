#pragma once

#include <stdexcept>
#include <string>

namespace nullcurve {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Metric Gram matrix singular at a sample point.
struct DegenerateMetric : Error {
    using Error::Error;
};

// Curve violates the regularity requirement (vanishing velocity).
struct ZeroVelocity : Error {
    using Error::Error;
};

// (a, b) = (0, 0): no such slant null curve exists, the frame basis collapses.
struct ForbiddenDegenerate : Error {
    using Error::Error;
};

// a^4 + b^2 below tolerance: slant frame formulas are undefined.
struct DegenerateSlant : Error {
    using Error::Error;
};

// Frame construction requested at a point where the first curvature vanishes.
struct GeodesicPoint : Error {
    using Error::Error;
};

// Matrix is not of the ad-matrix shape of the solvable algebra.
struct MalformedA : Error {
    using Error::Error;
};

// Closed-form adjoint curve requires a nonzero contact component.
struct ZeroA : Error {
    using Error::Error;
};

// Arc-length reparameterization hit a direction of vanishing speed.
struct NullDirection : Error {
    using Error::Error;
};

// Input curve matches neither branch of the induced-curve theorems.
struct PreconditionMismatch : Error {
    using Error::Error;
};

// Malformed configuration / input table.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace nullcurve
