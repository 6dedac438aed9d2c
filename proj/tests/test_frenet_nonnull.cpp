#include "nullcurve/errors.hpp"
#include "nullcurve/fixtures.hpp"
#include "nullcurve/frenet_nonnull.hpp"
#include "nullcurve/numerics.hpp"

#include <doctest.h>

#include <cmath>

using namespace nullcurve;

namespace {

FrameConnection gtilde_connection(const ACBMStructure& s) {
    const auto pts = halton_points(32, Vec3(-1, -1, -1), Vec3(1, 1, 1));
    return koszul_connection(s, associated_metric(s), pts);
}

double gtilde_speed(const ACBMStructure& s, const Curve& c, double t) {
    const Vec3 v = c.velocity(t);
    return inner(associated_metric(s).value(c.position(t)), v, v);
}

}  // namespace

TEST_CASE("arc-length reparameterization") {
    const ACBMStructure s = product_manifold();

    SUBCASE("unit-speed Legendre curve is untouched") {
        const Curve unit = arc_length_reparam(example_c().curve, s, MetricTag::GTilde);
        CHECK(unit.t0() == doctest::Approx(-2.0));
        CHECK(unit.t1() == doctest::Approx(2.0));
        for (double t : {-1.0, 0.0, 1.5})
            CHECK(gtilde_speed(s, unit, t) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("spacelike slant curve") {
        const Curve unit = arc_length_reparam(example_b().curve, s, MetricTag::GTilde);
        for (double t : {-1.0, 0.7})
            CHECK(gtilde_speed(s, unit, t) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("negative constant b gives a timelike unit curve") {
        const Curve unit =
            arc_length_reparam(liegroup_slant(0.0, -2.0).curve, s, MetricTag::GTilde);
        for (double t : {-1.0, 0.4})
            CHECK(gtilde_speed(s, unit, t) == doctest::Approx(-1.0).epsilon(1e-12));
    }

    SUBCASE("scaling is the exact linear substitution") {
        const Curve unit =
            arc_length_reparam(liegroup_slant(-0.7, 0.0).curve, s, MetricTag::GTilde);
        // speed sqrt(a^2) = 0.7 stretches the domain linearly
        CHECK(unit.t0() == doctest::Approx(-1.4));
        CHECK(unit.t1() == doctest::Approx(1.4));
        CHECK(gtilde_speed(s, unit, 0.3) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("varying speed goes through quadrature") {
        auto pos = [](double t) { return Vec3(std::sinh(t), -t, 0.0); };
        auto vel = [](double t) { return Vec3(std::cosh(t), -1.0, 0.0); };
        auto acc = [](double t) { return Vec3(std::sinh(t), 0.0, 0.0); };
        const Curve c(pos, vel, acc, -1.0, 1.0, "varying");
        CHECK(gtilde_speed(s, c, 0.5) == doctest::Approx(2.0 * std::cosh(0.5)));
        const Curve unit = arc_length_reparam(c, s, MetricTag::GTilde);
        CHECK(unit.t0() == 0.0);
        for (double u : probe_grid(unit.window(), 16))
            CHECK(std::abs(gtilde_speed(s, unit, u)) == doctest::Approx(1.0).epsilon(1e-5));
    }

    SUBCASE("null direction under the associated metric is rejected") {
        CHECK_THROWS_AS((void)arc_length_reparam(example_a().curve, s, MetricTag::GTilde),
                        NullDirection);
    }
}

TEST_CASE("orthonormal apparatus of the induced curves") {
    const ACBMStructure s = product_manifold();
    const FrameConnection conn_t = gtilde_connection(s);

    SUBCASE("Legendre null cubic becomes a geodesic") {
        const Curve unit = arc_length_reparam(example_c().curve, s, MetricTag::GTilde);
        const NonNullApparatus ap = frenet_apparatus(unit, s, conn_t, unit.window());
        CHECK(ap.order == 1);
        for (double u : {-1.0, 0.3})
            CHECK(covariant_acceleration(unit, conn_t, u).norm() <= 1e-12);
    }

    SUBCASE("phi-geodesic becomes a proper helix with unit invariants") {
        const Curve unit = arc_length_reparam(example_b().curve, s, MetricTag::GTilde);
        const NonNullApparatus ap = frenet_apparatus(unit, s, conn_t, unit.window());
        REQUIRE(ap.order == 3);
        CHECK(ap.eps1 == 1);
        CHECK(ap.eps2 == 1);
        CHECK(ap.eps3 == -1);
        for (double u : {-0.8, 0.0, 1.2}) {
            CHECK((ap.E1(u) - Vec3(0, 1, -1)).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK((ap.E2(u) - Vec3(-1, 0, 1)).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK((ap.E3(u) - Vec3(-1, -1, 1)).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK(ap.k(u) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(ap.tau(u) == doctest::Approx(1.0).epsilon(1e-12));
        }
        CHECK(classify_nonnull(ap.k, ap.tau, unit.window()) == NonNullClass::ProperHelix);
    }

    SUBCASE("group curves with b = 0 satisfy the full frame system") {
        for (double a : {0.7, -0.45, 1.3}) {
            const Curve unit =
                arc_length_reparam(liegroup_slant(a, 0.0).curve, s, MetricTag::GTilde);
            const Window wu = unit.window();
            const NonNullApparatus ap = frenet_apparatus(unit, s, conn_t, wu);
            REQUIRE(ap.order == 3);
            const double sgn = a > 0 ? 1.0 : -1.0;
            for (double u : probe_grid(wu, 8)) {
                CHECK(ap.k(u) == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(ap.tau(u) == doctest::Approx(1.0).epsilon(1e-12));
                const Vec3 pt = unit.position(u);
                const Vec3 vp = unit.velocity(u);
                const Vec3 phi_v = s.phi(pt) * vp;
                CHECK((ap.E2(u) - (-sgn * phi_v + s.xi(pt))).cwiseAbs().maxCoeff() <= 1e-12);
                CHECK((ap.E3(u) - (phi_v - vp)).cwiseAbs().maxCoeff() <= 1e-12);

                // orthonormality with the prescribed causal signs
                const Mat3 gt = associated_metric(s).value(pt);
                CHECK(inner(gt, ap.E1(u), ap.E1(u)) == doctest::Approx(ap.eps1));
                CHECK(inner(gt, ap.E2(u), ap.E2(u)) == doctest::Approx(ap.eps2));
                CHECK(inner(gt, ap.E3(u), ap.E3(u)) == doctest::Approx(ap.eps3));
                CHECK(std::abs(inner(gt, ap.E1(u), ap.E2(u))) <= 1e-12);
                CHECK(std::abs(inner(gt, ap.E1(u), ap.E3(u))) <= 1e-12);
                CHECK(std::abs(inner(gt, ap.E2(u), ap.E3(u))) <= 1e-12);

                // Frenet system residuals, derivatives via the connection
                const Vec3 r1 = covariant_acceleration(unit, conn_t, u) -
                                double(ap.eps2) * ap.k(u) * ap.E2(u);
                const Vec3 r2 = covariant_derivative_along(unit, ap.E2, conn_t, u) +
                                double(ap.eps1) * ap.k(u) * ap.E1(u) -
                                double(ap.eps3) * ap.tau(u) * ap.E3(u);
                const Vec3 r3 = covariant_derivative_along(unit, ap.E3, conn_t, u) +
                                double(ap.eps2) * ap.tau(u) * ap.E2(u);
                CHECK(r1.norm() <= 1e-10);
                CHECK(r2.norm() <= 1e-10);
                CHECK(r3.norm() <= 1e-10);
            }
            CHECK(ap.eps3 == -ap.eps1 * ap.eps2);
        }
    }
}

TEST_CASE("derivative identities along b = 0 slant null curves") {
    const ACBMStructure s = product_manifold();
    const FrameConnection conn_t = gtilde_connection(s);
    const FrameConnection conn_g =
        koszul_connection(s, metric_field(s, MetricTag::G),
                          halton_points(16, Vec3(-1, -1, -1), Vec3(1, 1, 1)));

    const Curve c = liegroup_slant(0.9, 0.0).curve;
    auto phi_field = [&](double u) { return Vec3(s.phi(c.position(u)) * c.velocity(u)); };
    auto xi_field = [&](double u) { return s.xi(c.position(u)); };
    for (double t : {-0.6, 0.5}) {
        // rotated tangent is parallel under the associated connection
        CHECK(covariant_derivative_along(c, phi_field, conn_t, t).norm() <= 1e-10);
        // Reeb transport agrees under both connections
        const Vec3 lhs = covariant_derivative_along(c, xi_field, conn_t, t);
        const Vec3 rhs = covariant_derivative_along(c, xi_field, conn_g, t);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((lhs + phi_field(t)).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("non-null classification taxonomy") {
    const Window w{0.5, 2.0};
    auto constant = [](double v) { return [v](double) { return v; }; };
    CHECK(classify_nonnull(constant(0.0), constant(0.0), w) == NonNullClass::Geodesic);
    CHECK(classify_nonnull(constant(1.0), constant(0.0), w) == NonNullClass::PseudoCircle);
    CHECK(classify_nonnull(constant(1.0), constant(1.0), w) == NonNullClass::ProperHelix);
    auto lin = [](double t) { return t; };
    auto lin2 = [](double t) { return 2.0 * t; };
    CHECK(classify_nonnull(lin, lin2, w) == NonNullClass::GeneralizedHelix);
    auto quad = [](double t) { return t * t; };
    CHECK(classify_nonnull(lin, quad, w) == NonNullClass::Generic);
}

TEST_CASE("induced-curve reports") {
    const ACBMStructure s = product_manifold();
    const Window w{-2.0, 2.0};

    SUBCASE("constant-b Legendre branch") {
        const InducedReport rep = verify_induced_theorems(example_c().curve, s, w);
        CHECK(rep.path == InducedReport::Path::LegendreGeodesic);
        CHECK(rep.pass);
        for (const auto& c : rep.checks) CHECK(c.residual <= 1e-10);
    }

    SUBCASE("b = 0 slant branch") {
        const InducedReport rep = verify_induced_theorems(example_b().curve, s, w);
        CHECK(rep.path == InducedReport::Path::SlantProperHelix);
        CHECK(rep.pass);
    }

    SUBCASE("neither branch applies to the hyperbolic curve") {
        CHECK_THROWS_AS((void)verify_induced_theorems(example_a().curve, s, w),
                        PreconditionMismatch);
    }
}
