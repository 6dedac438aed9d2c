#include "nullcurve/frenet_null.hpp"

#include "nullcurve/errors.hpp"
#include "nullcurve/numerics.hpp"

#include <cmath>

namespace nullcurve {

namespace {

double s2_of(double a, double b) {
    const double a2 = a * a;
    return a2 * a2 + b * b;
}

void require_nondegenerate(double s2) {
    if (s2 <= tol::alg) throw DegenerateSlant("a^4 + b^2 below tolerance");
}

}  // namespace

AccelerationDecomposition decompose_acceleration(double a, double b, double b_dot) {
    const double s2 = s2_of(a, b);
    require_nondegenerate(s2);
    const double d = -2.0 * s2 + a * b_dot;
    AccelerationDecomposition out;
    out.alpha = -b * d / (2.0 * s2);
    out.beta = b * b_dot / (2.0 * s2);
    out.gamma = a * d / (2.0 * s2);
    out.det_delta = -s2;
    return out;
}

double k1_slant(double a, double b, double b_dot, int eps) {
    const double s2 = s2_of(a, b);
    require_nondegenerate(s2);
    return eps * (-2.0 * s2 + a * b_dot) / (2.0 * std::sqrt(s2));
}

double h_general(double a, double b, double b_dot) {
    const double s2 = s2_of(a, b);
    require_nondegenerate(s2);
    return b * b_dot / (2.0 * s2);
}

double k2_general(double a, double b, double b_dot, int eps) {
    const double s2 = s2_of(a, b);
    require_nondegenerate(s2);
    return eps * (-2.0 * a * a * s2 + 3.0 * a * a * a * b_dot) / (4.0 * std::pow(s2, 1.5));
}

double k2bar_distinguished(double a, double b, double b_dot, double b_ddot, int eps,
                           int eps1) {
    const double s2 = s2_of(a, b);
    require_nondegenerate(s2);
    const double a2 = a * a, a3 = a2 * a, a4 = a2 * a2, a6 = a4 * a2;
    const double d = -2.0 * s2 + a * b_dot;
    const double num = s2 * (8.0 * b * b_ddot + 20.0 * a3 * b_dot - 8.0 * a6 - 8.0 * a2 * b * b) -
                       a * b_dot * b_dot * b_dot -
                       2.0 * (3.0 * a4 + 7.0 * b * b) * b_dot * b_dot;
    return eps * eps1 * num / (4.0 * std::sqrt(s2) * d * d);
}

double k1_legendre(double b, int eps) { return eps * b; }

double k2bar_legendre(double b, double b_dot, double b_ddot, int eps, int eps1) {
    if (std::abs(b) <= tol::slant) throw ForbiddenDegenerate("Legendre curve with b near 0");
    // sign fixed by closing the Frenet system for the W = eps*xi screen convention
    return -eps * eps1 * (4.0 * b * b_ddot - 7.0 * b_dot * b_dot) / (8.0 * b * b * b);
}

namespace {

struct PointData {
    Vec3 v, phi_v, xi;
    double a, b, b_dot, b_ddot;
    double s2, sq;
};

PointData point_data(const Curve& c, const ACBMStructure& s, const SlantInvariants& inv,
                     double t) {
    PointData d;
    const Vec3 pt = c.position(t);
    d.v = c.velocity(t);
    d.phi_v = s.phi(pt) * d.v;
    d.xi = s.xi(pt);
    d.a = inv.a;
    d.b = inv.b(t);
    d.b_dot = inv.b_dot(t);
    d.b_ddot = inv.b_ddot(t);
    d.s2 = s2_of(d.a, d.b);
    require_nondegenerate(d.s2);
    d.sq = std::sqrt(d.s2);
    return d;
}

void require_non_geodesic(double k1, double a, double b) {
    if (std::abs(k1) <= tol::geodesic(a, b))
        throw GeodesicPoint("first curvature vanishes at this parameter");
}

}  // namespace

NullFrenetData general_frame_F(const Curve& c, const ACBMStructure& s,
                               const SlantInvariants& inv, double t, SignConvention signs) {
    const PointData d = point_data(c, s, inv, t);
    const double k1 = k1_slant(d.a, d.b, d.b_dot, signs.eps);
    require_non_geodesic(k1, d.a, d.b);

    NullFrenetData f;
    f.tangent = d.v;
    f.W = (-signs.eps * d.b / d.sq) * d.xi + (signs.eps * d.a / d.sq) * d.phi_v;
    f.N = (d.a * d.a * d.a / d.s2) * d.xi - (d.a * d.a / (2.0 * d.s2)) * d.v +
          (d.b / d.s2) * d.phi_v;
    f.h = h_general(d.a, d.b, d.b_dot);
    f.k1 = k1;
    f.k2 = k2_general(d.a, d.b, d.b_dot, signs.eps);
    f.frame_kind = FrameKind::GeneralF;
    f.signs = signs;
    return f;
}

NullFrenetData distinguished_frame_Fbar(const Curve& c, const ACBMStructure& s,
                                        const SlantInvariants& inv, double t,
                                        SignConvention signs) {
    const PointData d = point_data(c, s, inv, t);
    const double k1 = k1_slant(d.a, d.b, d.b_dot, signs.eps);
    require_non_geodesic(k1, d.a, d.b);

    const double dd = -2.0 * d.s2 + d.a * d.b_dot;
    const double beta = d.b * d.b_dot / (2.0 * d.s2);
    const Vec3 w = (-signs.eps * d.b / d.sq) * d.xi + (signs.eps * d.a / d.sq) * d.phi_v;

    NullFrenetData f;
    f.tangent = d.v;
    f.W = signs.eps1 * (w + (beta / k1) * d.v);
    const double lam = (d.b_dot - 2.0 * d.a * d.a * d.a) / dd;
    const double mu =
        -(4.0 * d.a * d.a * (d.s2 - d.a * d.b_dot) + d.b_dot * d.b_dot) / (2.0 * dd * dd);
    const double nu = -2.0 * d.b / dd;
    f.N = lam * d.xi + mu * d.v + nu * d.phi_v;
    f.h = 0.0;
    f.k1 = signs.eps1 * k1;
    f.k2 = k2bar_distinguished(d.a, d.b, d.b_dot, d.b_ddot, signs.eps, signs.eps1);
    f.frame_kind = FrameKind::DistinguishedFbar;
    f.signs = signs;
    return f;
}

LegendreFrames legendre_frames(const Curve& c, const ACBMStructure& s,
                               const SlantInvariants& inv, double t, SignConvention signs) {
    if (!inv.legendre) throw Error("legendre_frames requires a Legendre curve (a = 0)");
    if (std::abs(inv.b(t)) <= tol::slant)
        throw ForbiddenDegenerate("Legendre curve with b near 0");
    const PointData d = point_data(c, s, inv, t);

    LegendreFrames out;
    NullFrenetData& f = out.F;
    f.tangent = d.v;
    f.W = double(signs.eps) * d.xi;
    f.N = (1.0 / d.b) * d.phi_v;
    f.h = d.b_dot / (2.0 * d.b);
    f.k1 = k1_legendre(d.b, signs.eps);
    f.k2 = 0.0;
    f.frame_kind = FrameKind::GeneralF;
    f.signs = signs;

    NullFrenetData& fb = out.Fbar;
    const double sigma = double(signs.eps) * double(signs.eps1);
    fb.tangent = d.v;
    fb.W = sigma * (d.xi + (d.b_dot / (2.0 * d.b * d.b)) * d.v);
    fb.N = -(d.b_dot / (2.0 * d.b * d.b)) * d.xi -
           (d.b_dot * d.b_dot / (8.0 * std::pow(d.b, 4))) * d.v + (1.0 / d.b) * d.phi_v;
    fb.h = 0.0;
    fb.k1 = sigma * d.b;
    fb.k2 = k2bar_legendre(d.b, d.b_dot, d.b_ddot, signs.eps, signs.eps1);
    fb.frame_kind = FrameKind::DistinguishedFbar;
    fb.signs = signs;
    return out;
}

GeodesicCheck is_geodesic_slant(double a, const std::function<double(double)>& b_fn,
                                const Window& w, double tolerance,
                                const std::function<double(double)>& b_dot_fn) {
    auto b_dot = b_dot_fn ? b_dot_fn : std::function<double(double)>([&b_fn](double t) {
        return fd::stencil5(b_fn, t, fd::step5(t));
    });

    GeodesicCheck out;
    const auto grid = probe_grid(w);
    for (double t : grid)
        out.max_k1 = std::max(out.max_k1, std::abs(k1_slant(a, b_fn(t), b_dot(t), +1)));
    out.geodesic = out.max_k1 <= tolerance;

    if (out.geodesic && std::abs(a) > tol::slant) {
        // fit the phase of the geodesic tangent law b = a^2 tan(2a(t + C1))
        const double t0 = grid.front();
        const double c1 = std::atan(b_fn(t0) / (a * a)) / (2.0 * a) - t0;
        double fit_residual = 0.0;
        double b_scale = 1.0;
        for (double t : grid) {
            fit_residual = std::max(fit_residual,
                                    std::abs(b_fn(t) - a * a * std::tan(2.0 * a * (t + c1))));
            b_scale = std::max(b_scale, std::abs(b_fn(t)));
        }
        if (fit_residual <= 1e-6 * b_scale) out.C1 = c1;
    }
    return out;
}

PhiGeodesicCheck is_phi_geodesic(const Curve& c, const ACBMStructure& s,
                                 const FrameConnection& conn, const Window& w,
                                 double tolerance) {
    PhiGeodesicCheck out;
    for (double t : probe_grid(w)) {
        const Vec3 pt = c.position(t);
        const Vec3 r = covariant_acceleration(c, conn, t) - s.phi(pt) * c.velocity(t);
        out.max_residual = std::max(out.max_residual, r.norm());
    }
    out.phi_geodesic = out.max_residual <= tolerance;
    return out;
}

NullFrenetData phi_geodesic_cartan_frame(const Curve& c, const ACBMStructure& s, double t) {
    const Vec3 pt = c.position(t);
    const Vec3 v = c.velocity(t);
    NullFrenetData f;
    f.tangent = v;
    f.N = -s.xi(pt) - 0.5 * v;
    f.W = s.phi(pt) * v;
    f.h = 0.0;
    f.k1 = 1.0;
    f.k2 = 0.5;
    f.frame_kind = FrameKind::DistinguishedFbar;
    f.signs = {+1, -1};  // the orbit under which the normalized curvature is +1
    return f;
}

ConstantCurvatureCheck constant_curvature_check(const SlantInvariants& inv, const Window& w,
                                                SignConvention signs, double tolerance) {
    ConstantCurvatureCheck out;
    const auto grid = probe_grid(w);

    double b_sum = 0.0;
    double k1_min = 0, k1_max = 0, k2_min = 0, k2_max = 0;
    bool first = true;
    for (double t : grid) {
        const double b = inv.b(t);
        const double bd = inv.b_dot(t);
        const double bdd = inv.b_ddot(t);
        b_sum += b;
        out.max_b_dot = std::max(out.max_b_dot, std::abs(bd));
        const double k1b = signs.eps1 * k1_slant(inv.a, b, bd, signs.eps);
        const double k2b = k2bar_distinguished(inv.a, b, bd, bdd, signs.eps, signs.eps1);
        if (first) {
            k1_min = k1_max = k1b;
            k2_min = k2_max = k2b;
            first = false;
        } else {
            k1_min = std::min(k1_min, k1b);
            k1_max = std::max(k1_max, k1b);
            k2_min = std::min(k2_min, k2b);
            k2_max = std::max(k2_max, k2b);
        }
    }
    out.curvature_variation = std::max(k1_max - k1_min, k2_max - k2_min);
    out.is_const = out.max_b_dot <= tolerance;
    out.b_const = b_sum / static_cast<double>(grid.size());

    if (out.is_const) {
        const double a = inv.a, b = out.b_const;
        const double sq = std::sqrt(s2_of(a, b));
        const double sigma = double(signs.eps) * double(signs.eps1);
        out.k1bar = sigma * (-sq);
        out.k2bar = sigma * (-a * a / (2.0 * sq));
        // measured values must collapse onto the constants
        const double allow = std::max(tol::alg, 10.0 * out.max_b_dot) * std::max(1.0, sq);
        if (std::abs(k1_max - out.k1bar) > allow || std::abs(k1_min - out.k1bar) > allow ||
            std::abs(k2_max - out.k2bar) > allow || std::abs(k2_min - out.k2bar) > allow)
            throw Error("constant-b curvatures disagree with their closed-form constants");
    } else {
        out.k1bar = 0.5 * (k1_min + k1_max);
        out.k2bar = 0.5 * (k2_min + k2_max);
    }
    return out;
}

HelixCheck is_generalized_helix(const SlantInvariants& inv, const Window& w,
                                double tolerance) {
    HelixCheck out;
    const auto grid = probe_grid(w);
    double b_sum = 0.0, max_bd = 0.0;
    for (double t : grid) {
        b_sum += inv.b(t);
        max_bd = std::max(max_bd, std::abs(inv.b_dot(t)));
    }
    out.b_const = b_sum / static_cast<double>(grid.size());

    const double a = inv.a;
    const double mid = 0.5 * (w.t0 + w.t1);
    // sign orbit normalizing the first curvature to +1
    out.k2bar = k2bar_distinguished(a, out.b_const, inv.b_dot(mid), inv.b_ddot(mid), +1, -1);
    const double k1bar = -k1_slant(a, out.b_const, inv.b_dot(mid), +1);

    const bool b_const = max_bd <= tolerance;
    const bool a_admissible = std::abs(a) > tol::slant && std::abs(a) <= 1.0 + tol::alg;
    const bool pitch = std::abs(out.b_const * out.b_const - (1.0 - std::pow(a, 4))) <= tolerance;
    const bool unit_curvature = std::abs(k1bar - 1.0) <= tolerance;
    const bool torsion = std::abs(out.k2bar - a * a / 2.0) <= tolerance;
    out.generalized_helix = b_const && a_admissible && pitch && unit_curvature && torsion;
    return out;
}

bool is_null_cubic(const SlantInvariants& inv, const Window& w, SignConvention signs,
                   double tolerance) {
    if (!inv.legendre) return false;
    const auto grid = probe_grid(w);
    double b_sum = 0.0, max_bd = 0.0;
    for (double t : grid) {
        b_sum += inv.b(t);
        max_bd = std::max(max_bd, std::abs(inv.b_dot(t)));
    }
    if (max_bd > tol::num) return false;
    const double b = b_sum / static_cast<double>(grid.size());
    return std::abs(double(signs.eps) * double(signs.eps1) * b - 1.0) <= tolerance;
}

FrenetResiduals frenet_residuals(const Curve& c,
                                 const std::function<NullFrenetData(double)>& frames,
                                 const FrameConnection& conn, const Window& w, int samples) {
    auto n_field = [frames](double u) { return frames(u).N; };
    auto w_field = [frames](double u) { return frames(u).W; };

    FrenetResiduals r;
    for (double t : probe_grid(w, samples)) {
        const NullFrenetData f = frames(t);
        const Vec3 r1 =
            covariant_acceleration(c, conn, t) - (f.h * f.tangent + f.k1 * f.W);
        const Vec3 r2 =
            covariant_derivative_along(c, n_field, conn, t) - (-f.h * f.N + f.k2 * f.W);
        const Vec3 r3 = covariant_derivative_along(c, w_field, conn, t) -
                        (-f.k2 * f.tangent - f.k1 * f.N);
        r.tangent_eq = std::max(r.tangent_eq, r1.norm());
        r.transversal_eq = std::max(r.transversal_eq, r2.norm());
        r.screen_eq = std::max(r.screen_eq, r3.norm());
    }
    return r;
}

double null_frame_residual(const ACBMStructure& s, const Vec3& pt, const NullFrenetData& f) {
    const Mat3 g = s.metric(pt);
    double r = std::abs(inner(g, f.tangent, f.N) - 1.0);
    r = std::max(r, std::abs(inner(g, f.W, f.W) - 1.0));
    r = std::max(r, std::abs(inner(g, f.N, f.N)));
    r = std::max(r, std::abs(inner(g, f.N, f.W)));
    r = std::max(r, std::abs(inner(g, f.tangent, f.W)));
    return r;
}

}  // namespace nullcurve
