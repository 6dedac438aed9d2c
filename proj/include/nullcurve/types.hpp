#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>

namespace nullcurve {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Connection coefficients in a frame: gamma[i].col(j) holds the frame
// components of the covariant derivative of e_j along e_i.
using Gamma3 = std::array<Mat3, 3>;

enum class MetricTag { G, GTilde };
enum class CausalCharacter { Null, Spacelike, Timelike };
enum class FrameKind { GeneralF, DistinguishedFbar };
enum class NonNullClass { Geodesic, PseudoCircle, Helix, ProperHelix, GeneralizedHelix, Generic };

// Screen-bundle sign choices. Each factor is exactly +1 or -1.
struct SignConvention {
    int eps = +1;
    int eps1 = +1;
};

struct Window {
    double t0 = 0.0;
    double t1 = 1.0;
    double length() const { return t1 - t0; }
};

namespace tol {
// Closed-form algebraic identities (exact arithmetic expressions).
inline constexpr double alg = 1e-10;
// Differentiated identities with analytic derivatives / with finite differences.
inline constexpr double num = 1e-6;
inline constexpr double num_fd = 1e-4;
// Constancy of the slant invariant a.
inline constexpr double slant = 1e-8;
// Frenet-system residuals, analytic / finite-difference inputs.
inline constexpr double frenet = 1e-5;
inline constexpr double frenet_fd = 1e-3;
// Switch point of the exponential map to series-stabilized coefficients.
inline constexpr double x3_switch = 1e-6;
// Osculating-order detection thresholds.
inline constexpr double order = 1e-7;
// A velocity is treated as constant-speed below this spread.
inline constexpr double const_speed = 1e-9;

// Geodesic detection threshold, scaled with the curvature magnitude a^4+b^2.
inline double geodesic(double a, double b) {
    const double a2 = a * a;
    return 1e-7 * (1.0 + a2 * a2 + b * b);
}
}  // namespace tol

inline double inner(const Mat3& g, const Vec3& u, const Vec3& v) { return u.dot(g * v); }

}  // namespace nullcurve
