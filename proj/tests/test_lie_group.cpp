#include "nullcurve/errors.hpp"
#include "nullcurve/fixtures.hpp"
#include "nullcurve/frenet_null.hpp"
#include "nullcurve/lie_group.hpp"
#include "nullcurve/numerics.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace nullcurve;

namespace {

// scaled-and-squared 20-term power series, the independent exponential oracle
Mat3 series_exp(const Mat3& a) {
    int squarings = 0;
    Mat3 scaled = a;
    while (scaled.cwiseAbs().maxCoeff() > 0.5) {
        scaled *= 0.5;
        ++squarings;
    }
    Mat3 sum = Mat3::Identity();
    Mat3 term = Mat3::Identity();
    for (int k = 1; k <= 20; ++k) {
        term = (term * scaled / double(k)).eval();
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) sum = (sum * sum).eval();
    return sum;
}

Vec3 random_vec(std::mt19937& rng, double radius) {
    std::uniform_real_distribution<double> u(-radius, radius);
    return Vec3(u(rng), u(rng), u(rng));
}

}  // namespace

TEST_CASE("ad matrices of the solvable algebra") {
    const Mat3 m3 = ad_matrix(Vec3(0, 0, 1));
    CHECK(m3(0, 1) == -1.0);
    CHECK(m3(1, 0) == 1.0);
    CHECK(m3.cwiseAbs().sum() == 2.0);

    CHECK(ad_matrix(Vec3::Zero()).cwiseAbs().maxCoeff() == 0.0);

    Mat3 expected;
    expected << 0, -1, 1,
                1, 0, -1,
                0, 0, 0;
    CHECK((ad_matrix(Vec3(1, 1, 1)) - expected).cwiseAbs().maxCoeff() == 0.0);

    // bottom row is always zero
    std::mt19937 rng(3u);
    for (int n = 0; n < 10; ++n)
        CHECK(ad_matrix(random_vec(rng, 5.0)).row(2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("bracket algebra properties") {
    std::mt19937 rng(17u);
    const ACBMStructure s = solvable_group();
    for (int n = 0; n < 25; ++n) {
        const Vec3 x = random_vec(rng, 3.0), y = random_vec(rng, 3.0), z = random_vec(rng, 3.0);
        // antisymmetry
        CHECK((algebra_bracket(x, y) + algebra_bracket(y, x)).cwiseAbs().maxCoeff() <= 1e-14);
        // representation property: ad_[x,y] = ad_x ad_y - ad_y ad_x
        const Mat3 lhs = ad_matrix(algebra_bracket(x, y));
        const Mat3 rhs = ad_matrix(x) * ad_matrix(y) - ad_matrix(y) * ad_matrix(x);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-13);
        // Jacobi identity
        const Vec3 jac = algebra_bracket(x, algebra_bracket(y, z)) +
                         algebra_bracket(y, algebra_bracket(z, x)) +
                         algebra_bracket(z, algebra_bracket(x, y));
        CHECK(jac.cwiseAbs().maxCoeff() <= 1e-13);
        // matches the structure's bracket table on basis pairs
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK((algebra_bracket(Vec3::Unit(i), Vec3::Unit(j)) -
                       s.bracket(i, j, Vec3::Zero()))
                          .cwiseAbs()
                          .maxCoeff() == 0.0);
    }
}

TEST_CASE("closed-form exponential") {
    SUBCASE("identity at zero") {
        CHECK((group_exp(Mat3::Zero()) - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("half-turn rotation") {
        const Mat3 e = group_exp(ad_matrix(Vec3(0, 0, M_PI)));
        Mat3 expected;
        expected << -1, 0, 0,
                    0, -1, 0,
                    0, 0, 1;
        CHECK((e - expected).cwiseAbs().maxCoeff() <= 1e-15);
    }

    SUBCASE("nilpotent translation at x3 = 0") {
        const Mat3 a = ad_matrix(Vec3(1, 0, 0));
        CHECK((a * a).cwiseAbs().maxCoeff() == 0.0);
        Mat3 expected;
        expected << 1, 0, 0,
                    0, 1, -1,
                    0, 0, 1;
        CHECK((group_exp(a) - expected).cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("series oracle on random algebra elements") {
        std::mt19937 rng(2024u);
        double worst = 0.0;
        for (int n = 0; n < 100; ++n) {
            const Vec3 x = random_vec(rng, 5.0);
            const Mat3 e = group_exp(ad_matrix(x));
            worst = std::max(worst, (e - series_exp(ad_matrix(x))).cwiseAbs().maxCoeff());
        }
        CHECK(worst <= 1e-10);
    }

    SUBCASE("series oracle across the small-angle switch") {
        for (double x3 : {1e-5, 9.9e-7, 1e-9, -1e-7, 0.0}) {
            const Vec3 x(0.8, -1.2, x3);
            CHECK((group_exp(ad_matrix(x)) - series_exp(ad_matrix(x))).cwiseAbs().maxCoeff() <=
                  1e-12);
        }
    }

    SUBCASE("group inverse and volume") {
        std::mt19937 rng(5u);
        for (int n = 0; n < 20; ++n) {
            const Vec3 x = random_vec(rng, 3.0);
            const Mat3 e = group_exp(ad_matrix(x));
            const Mat3 einv = group_exp(ad_matrix(-x));
            CHECK((e * einv - Mat3::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK(e.determinant() == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(e(2, 0) == 0.0);
            CHECK(e(2, 1) == 0.0);
            CHECK(e(2, 2) == 1.0);
        }
    }

    SUBCASE("eigendecomposition oracle") {
        std::mt19937 rng(11u);
        for (int n = 0; n < 20; ++n) {
            Vec3 x = random_vec(rng, 3.0);
            if (std::abs(x[2]) < 0.1) x[2] = 0.5;  // keep the eigenbasis well conditioned
            const AdExpData d = ad_exp_data(x);
            REQUIRE(d.has_eigendecomposition);
            Eigen::Matrix3cd j = Eigen::Matrix3cd::Zero();
            for (int i = 0; i < 3; ++i) j(i, i) = std::exp(d.eigvals[size_t(i)]);
            const Eigen::Matrix3cd rebuilt = d.P * j * d.P_inv;
            CHECK(rebuilt.imag().cwiseAbs().maxCoeff() <= 1e-11);
            CHECK((rebuilt.real() - d.expA).cwiseAbs().maxCoeff() <= 1e-11);
            // diagonalization property
            CHECK((d.A.cast<std::complex<double>>() * d.P -
                   d.P * Eigen::Vector3cd(d.eigvals[0], d.eigvals[1], d.eigvals[2]).asDiagonal()
                             .toDenseMatrix())
                      .cwiseAbs()
                      .maxCoeff() <= 1e-12);
        }
    }

    SUBCASE("malformed input is rejected") {
        Mat3 bad = Mat3::Zero();
        bad(2, 0) = 1.0;
        CHECK_THROWS_AS((void)group_exp(bad), MalformedA);
        bad = Mat3::Identity();
        CHECK_THROWS_AS((void)group_exp(bad), MalformedA);
    }
}

TEST_CASE("slant null tangents") {
    SUBCASE("frozen values") {
        const TangentSpec t10 = slant_null_tangent(1.0, 0.0);
        CHECK(t10.p == 0.0);
        CHECK(t10.q == doctest::Approx(1.0));
        CHECK(t10.r == 1.0);

        const TangentSpec t01 = slant_null_tangent(0.0, 1.0);
        CHECK(t01.p == doctest::Approx(-std::sqrt(0.5)));
        CHECK(t01.q == doctest::Approx(std::sqrt(0.5)));
        CHECK(t01.r == 0.0);
    }

    SUBCASE("null and contact-angle invariants") {
        const ACBMStructure s = solvable_group();
        const Mat3 g = s.metric(Vec3::Zero());
        const Mat3 phi = s.phi(Vec3::Zero());
        std::mt19937 rng(23u);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        for (int n = 0; n < 40; ++n) {
            const double a = u(rng), b = u(rng);
            if (std::pow(a, 4) + b * b < 1e-4) continue;
            const TangentSpec t = slant_null_tangent(a, b);
            const Vec3 v = t.vec();
            CHECK(std::abs(inner(g, v, v)) <= 1e-12);
            CHECK(inner(g, v, phi * v) == doctest::Approx(b).epsilon(1e-12));
            CHECK(s.eta(Vec3::Zero()).dot(v) == doctest::Approx(a));
        }
    }

    SUBCASE("helix family components") {
        const double a = 0.6;
        const TangentSpec t = helix_tangent(a, +1);
        CHECK(t.p == doctest::Approx(-std::sqrt(1.0 - a * a) / std::sqrt(2.0)));
        CHECK(t.q == doctest::Approx(std::sqrt(1.0 + a * a) / std::sqrt(2.0)));
        CHECK(t.r == a);
        CHECK(t.b == doctest::Approx(std::sqrt(1.0 - std::pow(a, 4))));
        CHECK_THROWS_AS((void)helix_tangent(0.0, +1), ForbiddenDegenerate);
    }

    CHECK_THROWS_AS((void)slant_null_tangent(0.0, 0.0), ForbiddenDegenerate);
}

TEST_CASE("adjoint curve matrices") {
    SUBCASE("identity at the origin of the parameter") {
        const Mat3 m = adjoint_curve(1.0, 0.5, 0.0);
        CHECK((m - Mat3::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
    }

    SUBCASE("frozen half-period matrix") {
        const Mat3 m = adjoint_curve(1.0, 0.0, M_PI);
        Mat3 expected;
        expected << -1, 0, 0,
                    0, -1, 2,
                    0, 0, 1;
        CHECK((m - expected).cwiseAbs().maxCoeff() <= 1e-14);
    }

    SUBCASE("agrees with the exponential of the scaled tangent") {
        std::mt19937 rng(31u);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        for (int n = 0; n < 30; ++n) {
            double a = u(rng);
            if (std::abs(a) < 0.05) a = 0.4;
            const double b = u(rng);
            const double t = u(rng);
            const TangentSpec spec = slant_null_tangent(a, b);
            const Mat3 direct = adjoint_curve(a, b, t);
            const Mat3 via_exp = group_exp(ad_matrix(t * spec.vec()));
            CHECK((direct - via_exp).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }

    SUBCASE("one-parameter subgroup law") {
        std::mt19937 rng(37u);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        for (int n = 0; n < 50; ++n) {
            const double t = u(rng), w = u(rng);
            const Mat3 prod = adjoint_curve(0.8, 1.1, t) * adjoint_curve(0.8, 1.1, w);
            CHECK((adjoint_curve(0.8, 1.1, t + w) - prod).cwiseAbs().maxCoeff() <= 1e-9);
        }
    }

    SUBCASE("rotation block closes after a full period") {
        const double a = 0.75;
        const Mat3 m = adjoint_curve(a, 0.3, 2.0 * M_PI / std::abs(a));
        CHECK((m.topLeftCorner<2, 2>() - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <=
              1e-12);
    }

    CHECK_THROWS_AS((void)adjoint_curve(0.0, 1.0, 0.5), ZeroA);
}

TEST_CASE("group frame in closed form") {
    const ACBMStructure s = solvable_group();
    const Mat3 g = s.metric(Vec3::Zero());

    SUBCASE("unit screen field and frozen curvature pair") {
        std::mt19937 rng(41u);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        for (int n = 0; n < 30; ++n) {
            const double a = u(rng), b = u(rng);
            if (std::pow(a, 4) + b * b < 1e-4) continue;
            const LieFrame f = lie_frame_Fbar(a, b);
            CHECK(inner(g, f.Wbar, f.Wbar) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(inner(g, f.tangent, f.Nbar) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(std::abs(inner(g, f.Nbar, f.Nbar)) <= 1e-12);
            CHECK(std::abs(inner(g, f.Nbar, f.Wbar)) <= 1e-12);
        }
        const LieFrame f = lie_frame_Fbar(1.0, 0.0);
        CHECK(f.k1bar == doctest::Approx(1.0));
        CHECK(f.k2bar == doctest::Approx(0.5));
    }

    SUBCASE("helix members carry unit curvature") {
        for (double a : {0.3, 0.6, -0.9}) {
            for (int eps : {+1, -1}) {
                const TangentSpec t = helix_tangent(a, eps);
                const LieFrame f = lie_frame_Fbar(a, t.b);
                CHECK(f.k1bar == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(f.k2bar == doctest::Approx(a * a / 2.0).epsilon(1e-12));

                const double s2 = std::sqrt(2.0);
                const Vec3 w_expected(a * std::sqrt(1 + a * a) / s2,
                                      eps * a * std::sqrt(1 - a * a) / s2,
                                      eps * std::sqrt(1 - std::pow(a, 4)));
                CHECK((f.Wbar - w_expected).cwiseAbs().maxCoeff() <= 1e-12);
                const Vec3 n_expected(-eps * std::sqrt(1 - a * a) * (2 + a * a) / (2 * s2),
                                      -std::sqrt(1 + a * a) * (2 - a * a) / (2 * s2),
                                      a * a * a / 2.0);
                CHECK((f.Nbar - n_expected).cwiseAbs().maxCoeff() <= 1e-12);
            }
        }
    }

    SUBCASE("frame satisfies the Frenet system along the group curve") {
        const auto pts = halton_points(16, Vec3(-1, -1, -1), Vec3(1, 1, 1));
        const FrameConnection conn = koszul_connection(s, metric_field(s, MetricTag::G), pts);
        std::mt19937 rng(43u);
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        for (int n = 0; n < 10; ++n) {
            const double a = u(rng), b = u(rng);
            if (std::pow(a, 4) + b * b < 1e-2) continue;
            const LieFrame f = lie_frame_Fbar(a, b);
            const CurveFixture cf = liegroup_slant(a, b);
            auto series = [&](double) {
                NullFrenetData d;
                d.tangent = f.tangent;
                d.N = f.Nbar;
                d.W = f.Wbar;
                d.h = 0.0;
                d.k1 = f.k1bar;
                d.k2 = f.k2bar;
                d.frame_kind = FrameKind::DistinguishedFbar;
                return d;
            };
            CHECK(frenet_residuals(cf.curve, series, conn, {-2.0, 2.0}).max() <= 1e-12);
        }
    }
}

TEST_CASE("group curve through the generic frame pipeline") {
    const ACBMStructure s = solvable_group();
    const Window w{-2.0, 2.0};
    std::mt19937 rng(47u);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int n = 0; n < 20; ++n) {
        double a = u(rng);
        if (std::abs(a) < 0.1) a = 0.7;
        const double b = u(rng);
        const LieFrame expected = lie_frame_Fbar(a, b);
        const CurveFixture cf = liegroup_slant(a, b);
        const SlantInvariants inv = slant_invariants(cf.curve, s, probe_grid(w), cf.closures);
        // the positive-curvature orbit of the generic construction
        const NullFrenetData fb = distinguished_frame_Fbar(cf.curve, s, inv, 0.3, {+1, -1});
        CHECK(fb.k1 == doctest::Approx(expected.k1bar).epsilon(1e-12));
        CHECK(fb.k2 == doctest::Approx(expected.k2bar).epsilon(1e-12));
        CHECK((fb.W - expected.Wbar).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((fb.N - expected.Nbar).cwiseAbs().maxCoeff() <= 1e-12);
    }
}
