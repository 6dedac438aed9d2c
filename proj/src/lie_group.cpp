#include "nullcurve/lie_group.hpp"

#include "nullcurve/errors.hpp"

#include <cmath>

namespace nullcurve {

Mat3 ad_matrix(const Vec3& x) {
    Mat3 a;
    a << 0.0, -x[2], x[1],
         x[2], 0.0, -x[0],
         0.0, 0.0, 0.0;
    return a;
}

Vec3 algebra_bracket(const Vec3& x, const Vec3& y) { return ad_matrix(x) * y; }

namespace {
void require_ad_shape(const Mat3& a) {
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    const double tolerance = tol::alg * scale;
    const bool ok = std::abs(a(2, 0)) <= tolerance && std::abs(a(2, 1)) <= tolerance &&
                    std::abs(a(2, 2)) <= tolerance && std::abs(a(0, 0)) <= tolerance &&
                    std::abs(a(1, 1)) <= tolerance &&
                    std::abs(a(0, 1) + a(1, 0)) <= tolerance;
    if (!ok) throw MalformedA("matrix is not an ad-matrix of the solvable algebra");
}
}  // namespace

Mat3 group_exp(const Mat3& a) {
    require_ad_shape(a);
    const double x3 = a(1, 0);
    const double x2 = a(0, 2);
    const double x1 = -a(1, 2);

    // translation-column coefficients (1 - cos x3)/x3 and sin(x3)/x3
    double c1, c2;
    if (std::abs(x3) > tol::x3_switch) {
        c1 = (1.0 - std::cos(x3)) / x3;
        c2 = std::sin(x3) / x3;
    } else {
        const double u = x3 * x3;
        c1 = x3 * (0.5 - u / 24.0 + u * u / 720.0);
        c2 = 1.0 - u / 6.0 + u * u / 120.0;
    }

    Mat3 e;
    const double cs = std::cos(x3), sn = std::sin(x3);
    e << cs, -sn, x1 * c1 + x2 * c2,
         sn, cs, x2 * c1 - x1 * c2,
         0.0, 0.0, 1.0;
    return e;
}

AdExpData ad_exp_data(const Vec3& x) {
    AdExpData d;
    d.x = x;
    d.A = ad_matrix(x);
    d.expA = group_exp(d.A);
    const double x3 = x[2];
    using cd = std::complex<double>;
    d.eigvals = {cd(0.0, 0.0), cd(0.0, x3), cd(0.0, -x3)};
    if (std::abs(x3) > tol::x3_switch) {
        // eigenbasis: the algebra element itself for 0, the rotating pair for +-i x3
        d.P.col(0) = Eigen::Vector3cd(x[0], x[1], x[2]);
        d.P.col(1) = Eigen::Vector3cd(cd(0, 1), cd(1, 0), cd(0, 0));
        d.P.col(2) = Eigen::Vector3cd(cd(1, 0), cd(0, 1), cd(0, 0));
        d.P_inv = d.P.inverse();
        d.has_eigendecomposition = true;
    }
    return d;
}

TangentSpec slant_null_tangent(double a, double b) {
    const double a2 = a * a;
    const double s2 = a2 * a2 + b * b;
    if (s2 <= tol::alg) throw ForbiddenDegenerate("slant data (a, b) too close to (0, 0)");
    TangentSpec t;
    t.a = a;
    t.b = b;
    t.eps = b < 0.0 ? -1 : +1;
    const double sq = std::hypot(a2, b);
    t.p = -t.eps * std::sqrt(std::max(0.0, (sq - a2) / 2.0));
    t.q = std::sqrt((sq + a2) / 2.0);
    t.r = a;
    return t;
}

TangentSpec helix_tangent(double a, int eps) {
    const double a4 = a * a * a * a;
    if (std::abs(a) <= tol::slant || a4 > 1.0 + tol::alg)
        throw ForbiddenDegenerate("helix family requires a in [-1,0) u (0,1]");
    return slant_null_tangent(a, eps * std::sqrt(std::max(0.0, 1.0 - a4)));
}

Mat3 adjoint_curve(double a, double b, double t) {
    if (std::abs(a) <= tol::alg)
        throw ZeroA("closed-form adjoint curve needs a != 0; use group_exp for a = 0");
    const TangentSpec spec = slant_null_tangent(a, b);
    const double at = a * t;
    const double cs = std::cos(at), sn = std::sin(at);
    const double pa = spec.p / a, qa = spec.q / a;
    Mat3 m;
    m << cs, -sn, pa * (1.0 - cs) + qa * sn,
         sn, cs, qa * (1.0 - cs) - pa * sn,
         0.0, 0.0, 1.0;
    return m;
}

LieFrame lie_frame_Fbar(double a, double b) {
    const TangentSpec t = slant_null_tangent(a, b);
    const double a2 = a * a;
    const double sq = std::hypot(a2, b);
    const double s2 = sq * sq;
    LieFrame f;
    f.tangent = t.vec();
    f.Wbar = Vec3(a * t.q / sq, -a * t.p / sq, b / sq);
    f.Nbar = Vec3(-(a2 * t.p + 2.0 * b * t.q) / (2.0 * s2),
                  (-a2 * t.q + 2.0 * b * t.p) / (2.0 * s2),
                  a2 * a / (2.0 * s2));
    f.k1bar = sq;
    f.k2bar = a2 / (2.0 * sq);
    return f;
}

}  // namespace nullcurve
