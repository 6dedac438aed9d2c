#include "nullcurve/fixtures.hpp"

#include "nullcurve/errors.hpp"
#include "nullcurve/lie_group.hpp"
#include "nullcurve/numerics.hpp"

#include <cmath>
#include <cstdio>

namespace nullcurve {

namespace {

std::array<std::array<Vec3, 3>, 3> standard_brackets() {
    std::array<std::array<Vec3, 3>, 3> br{};
    for (auto& row : br)
        for (auto& v : row) v = Vec3::Zero();
    br[0][2] = Vec3(0, -1, 0);  // [e1, e3] = -e2
    br[2][0] = -br[0][2];
    br[1][2] = Vec3(1, 0, 0);  // [e2, e3] = e1
    br[2][1] = -br[1][2];
    return br;
}

ACBMStructure standard_structure(std::string name) {
    Mat3 g = Mat3::Zero();
    g(0, 0) = 1.0;
    g(1, 1) = -1.0;
    g(2, 2) = 1.0;
    Mat3 phi = Mat3::Zero();
    phi(1, 0) = 1.0;   // phi e1 = e2
    phi(0, 1) = -1.0;  // phi e2 = -e1
    const Vec3 xi(0, 0, 1);
    const Vec3 eta(0, 0, 1);
    return ACBMStructure::constants(g, phi, xi, eta, standard_brackets(), std::move(name));
}

}  // namespace

ACBMStructure product_manifold() { return standard_structure("product_manifold"); }
ACBMStructure solvable_group() { return standard_structure("solvable_group"); }

ACBMStructure frame_structure_from_chart(const ACBMStructure::MatFn& chart_metric,
                                         const ACBMStructure::MatFn& chart_phi,
                                         const ACBMStructure::MatFn& frame_fields,
                                         const Vec3& xi_frame, std::string name) {
    auto metric = [chart_metric, frame_fields](const Vec3& pt) {
        const Mat3 e = frame_fields(pt);
        return Mat3(e.transpose() * chart_metric(pt) * e);
    };
    auto phi = [chart_phi, frame_fields](const Vec3& pt) {
        const Mat3 e = frame_fields(pt);
        return Mat3(e.inverse() * chart_phi(pt) * e);
    };
    auto xi = [xi_frame](const Vec3&) { return xi_frame; };
    auto eta = [metric, xi_frame](const Vec3& pt) {
        // eta(e_i) = g(e_i, xi) in the frame
        return Vec3(metric(pt) * xi_frame);
    };
    auto bracket = [frame_fields](int i, int j, const Vec3& pt) {
        // chart bracket [E_i, E_j]^k = E_i^a d_a E_j^k - E_j^a d_a E_i^k,
        // converted back to frame components
        auto field = [frame_fields](int idx, const Vec3& p) {
            return Vec3(frame_fields(p).col(idx));
        };
        Mat3 jac_i = Mat3::Zero(), jac_j = Mat3::Zero();
        const double h = fd::step1(pt.norm());
        for (int d = 0; d < 3; ++d) {
            const Vec3 dp = h * Vec3::Unit(d);
            jac_i.col(d) = (field(i, pt + dp) - field(i, pt - dp)) / (2.0 * h);
            jac_j.col(d) = (field(j, pt + dp) - field(j, pt - dp)) / (2.0 * h);
        }
        const Vec3 chart = jac_j * field(i, pt) - jac_i * field(j, pt);
        return Vec3(frame_fields(pt).partialPivLu().solve(chart));
    };
    return ACBMStructure::fields(metric, phi, xi, eta, bracket, nullptr, frame_fields,
                                 std::move(name));
}

ACBMStructure product_manifold_chart() {
    auto chart_metric = [](const Vec3& pt) {
        const double c = std::cos(2.0 * pt[2]), s = std::sin(2.0 * pt[2]);
        Mat3 g;
        g << c, s, 0.0,
             s, -c, 0.0,
             0.0, 0.0, 1.0;
        return g;
    };
    auto chart_phi = [](const Vec3&) {
        Mat3 j = Mat3::Zero();
        j(1, 0) = 1.0;
        j(0, 1) = -1.0;
        return j;
    };
    auto frame_fields = [](const Vec3& pt) {
        const double c = std::cos(pt[2]), s = std::sin(pt[2]);
        Mat3 e;
        e << c, -s, 0.0,
             s, c, 0.0,
             0.0, 0.0, 1.0;
        return e;
    };
    return frame_structure_from_chart(chart_metric, chart_phi, frame_fields, Vec3(0, 0, 1),
                                      "product_manifold_chart");
}

ACBMStructure structure_by_name(const std::string& name) {
    if (name == "product_manifold") return product_manifold();
    if (name == "solvable_group") return solvable_group();
    if (name == "product_manifold_chart") return product_manifold_chart();
    throw ConfigError("unknown manifold fixture: " + name);
}

CurveFixture example_a() {
    auto pos = [](double t) { return Vec3(std::cosh(t), std::sinh(t), t); };
    auto vel = [](double t) { return Vec3(std::sinh(t), std::cosh(t), 1.0); };
    auto acc = [](double t) { return Vec3(std::cosh(t), std::sinh(t), 0.0); };
    CurveFixture f{Curve(pos, vel, acc, -2.0, 2.0, "example_a"), {}};
    f.closures.b = [](double t) { return -std::sinh(2.0 * t); };
    f.closures.b_dot = [](double t) { return -2.0 * std::cosh(2.0 * t); };
    f.closures.b_ddot = [](double t) { return -4.0 * std::sinh(2.0 * t); };
    return f;
}

CurveFixture example_b() {
    auto pos = [](double t) { return Vec3(1.0, t, -t); };
    auto vel = [](double) { return Vec3(0.0, 1.0, -1.0); };
    auto acc = [](double) { return Vec3(0.0, 0.0, 0.0); };
    CurveFixture f{Curve(pos, vel, acc, -2.0, 2.0, "example_b"), {}};
    f.closures.b = [](double) { return 0.0; };
    f.closures.b_dot = [](double) { return 0.0; };
    f.closures.b_ddot = [](double) { return 0.0; };
    return f;
}

CurveFixture example_c() {
    const double half_sqrt2 = std::sqrt(2.0) / 2.0;
    auto pos = [half_sqrt2](double t) { return Vec3(half_sqrt2 * t, -half_sqrt2 * t, 1.0); };
    auto vel = [half_sqrt2](double) { return Vec3(half_sqrt2, -half_sqrt2, 0.0); };
    auto acc = [](double) { return Vec3(0.0, 0.0, 0.0); };
    CurveFixture f{Curve(pos, vel, acc, -2.0, 2.0, "example_c"), {}};
    f.closures.b = [](double) { return 1.0; };
    f.closures.b_dot = [](double) { return 0.0; };
    f.closures.b_ddot = [](double) { return 0.0; };
    return f;
}

CurveFixture liegroup_slant(double a, double b, double t0, double t1) {
    const TangentSpec spec = slant_null_tangent(a, b);
    const Vec3 v = spec.vec();
    char label[64];
    std::snprintf(label, sizeof label, "liegroup_slant(%g,%g)", a, b);
    auto pos = [v](double t) { return Vec3(t * v); };
    auto vel = [v](double) { return v; };
    auto acc = [](double) { return Vec3(0.0, 0.0, 0.0); };
    CurveFixture f{Curve(pos, vel, acc, t0, t1, label), {}};
    f.closures.b = [b](double) { return b; };
    f.closures.b_dot = [](double) { return 0.0; };
    f.closures.b_ddot = [](double) { return 0.0; };
    return f;
}

CurveFixture curve_by_name(const std::string& name) {
    if (name == "example_a") return example_a();
    if (name == "example_b") return example_b();
    if (name == "example_c") return example_c();
    const std::string prefix = "liegroup_slant(";
    if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
        const std::string args = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw ConfigError("liegroup_slant expects two arguments: " + name);
        try {
            const double a = std::stod(args.substr(0, comma));
            const double b = std::stod(args.substr(comma + 1));
            return liegroup_slant(a, b);
        } catch (const std::invalid_argument&) {
            throw ConfigError("malformed liegroup_slant arguments: " + name);
        }
    }
    throw ConfigError("unknown curve fixture: " + name);
}

}  // namespace nullcurve
