#pragma once

#include "nullcurve/types.hpp"

#include <complex>

namespace nullcurve {

/// Null tangent direction in the solvable algebra realizing a slant null
/// curve with invariants (a, b): components (p, q, r) over the frame.
struct TangentSpec {
    double a = 0.0;
    double b = 0.0;
    double p = 0.0;
    double q = 0.0;
    double r = 0.0;
    int eps = +1;  // sign of b (+1 when b = 0; p vanishes then)

    Vec3 vec() const { return {p, q, r}; }
};

/// Adjoint matrix of an algebra element together with its exponential and,
/// away from the degenerate contact component, the complex eigen data.
struct AdExpData {
    Vec3 x = Vec3::Zero();
    Mat3 A = Mat3::Zero();
    Mat3 expA = Mat3::Identity();
    std::array<std::complex<double>, 3> eigvals{};
    Eigen::Matrix3cd P = Eigen::Matrix3cd::Zero();
    Eigen::Matrix3cd P_inv = Eigen::Matrix3cd::Zero();
    bool has_eigendecomposition = false;  // false when x3 ~ 0 (eigenbasis collapses)
};

struct LieFrame {
    Vec3 tangent = Vec3::Zero();
    Vec3 Wbar = Vec3::Zero();
    Vec3 Nbar = Vec3::Zero();
    double k1bar = 0.0;
    double k2bar = 0.0;
};

/// Matrix of ad_X over the frame basis; the bottom row is always zero.
Mat3 ad_matrix(const Vec3& x);

/// Algebra bracket [X, Y].
Vec3 algebra_bracket(const Vec3& x, const Vec3& y);

/// Closed-form exponential of an ad-matrix. Below |x3| <= tol::x3_switch the
/// rotation/translation coefficients switch to series-stabilized limits.
/// Throws MalformedA when A is not an ad-matrix of this algebra.
Mat3 group_exp(const Mat3& A);

AdExpData ad_exp_data(const Vec3& x);

/// Null tangent with slant invariants (a, b); throws ForbiddenDegenerate on
/// (0, 0).
TangentSpec slant_null_tangent(double a, double b);

/// Tangent of the generalized-helix family: b = eps * sqrt(1 - a^4),
/// a in [-1,0) u (0,1].
TangentSpec helix_tangent(double a, int eps = +1);

/// Adjoint-representation matrix of the one-parameter slant null curve at t.
/// Requires a != 0 (the closed form divides by a); the a = 0 case goes
/// through group_exp directly. Throws ZeroA otherwise.
Mat3 adjoint_curve(double a, double b, double t);

/// Distinguished frame and curvatures of the group curve, in closed form.
LieFrame lie_frame_Fbar(double a, double b);

}  // namespace nullcurve
