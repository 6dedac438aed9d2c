#pragma once

#include "nullcurve/curves.hpp"
#include "nullcurve/manifold.hpp"
#include "nullcurve/types.hpp"

#include <functional>
#include <optional>

namespace nullcurve {

/// Coefficients of the covariant acceleration in the pointwise basis
/// {xi, tangent, phi tangent}; det_delta is the determinant of the
/// coefficient system and never vanishes on admissible slant data.
struct AccelerationDecomposition {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double det_delta = 0.0;
};

struct NullFrenetData {
    Vec3 tangent = Vec3::Zero();
    Vec3 N = Vec3::Zero();  // null transversal
    Vec3 W = Vec3::Zero();  // unit spacelike screen field
    double h = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;
    FrameKind frame_kind = FrameKind::GeneralF;
    SignConvention signs;
};

// --- scalar closed forms, all functions of the slant data (a, b, b', b'') ---

AccelerationDecomposition decompose_acceleration(double a, double b, double b_dot);
double k1_slant(double a, double b, double b_dot, int eps);
double h_general(double a, double b, double b_dot);
double k2_general(double a, double b, double b_dot, int eps);
double k2bar_distinguished(double a, double b, double b_dot, double b_ddot, int eps, int eps1);
// Legendre screen conventions: W = eps*xi, k1 = eps*b.
double k1_legendre(double b, int eps);
double k2bar_legendre(double b, double b_dot, double b_ddot, int eps, int eps1);

// --- frame builders ---

/// General Frenet frame of a non-geodesic slant null curve at t.
/// Throws GeodesicPoint when the first curvature is below the geodesic
/// threshold, DegenerateSlant when a^4+b^2 degenerates.
NullFrenetData general_frame_F(const Curve& c, const ACBMStructure& s,
                               const SlantInvariants& inv, double t, SignConvention signs);

/// Frenet frame for which the given parameter is distinguished (h = 0).
NullFrenetData distinguished_frame_Fbar(const Curve& c, const ACBMStructure& s,
                                        const SlantInvariants& inv, double t,
                                        SignConvention signs);

struct LegendreFrames {
    NullFrenetData F;
    NullFrenetData Fbar;
};

/// Both frames of a Legendre null curve (a = 0, b != 0); the screen of F is
/// the Reeb direction. Throws ForbiddenDegenerate when b vanishes.
LegendreFrames legendre_frames(const Curve& c, const ACBMStructure& s,
                               const SlantInvariants& inv, double t, SignConvention signs);

// --- classification ---

struct GeodesicCheck {
    bool geodesic = false;
    double max_k1 = 0.0;
    std::optional<double> C1;  // phase of the tangent law b = a^2 tan(2a(t+C1))
};

/// Geodesic test: the first curvature vanishes across the window. For a != 0
/// the integration constant of the geodesic law for b is fitted and verified.
GeodesicCheck is_geodesic_slant(double a, const std::function<double(double)>& b_fn,
                                const Window& w, double tolerance,
                                const std::function<double(double)>& b_dot_fn = nullptr);

struct PhiGeodesicCheck {
    bool phi_geodesic = false;
    double max_residual = 0.0;
};

/// Detects covariant acceleration equal to phi applied to the tangent.
PhiGeodesicCheck is_phi_geodesic(const Curve& c, const ACBMStructure& s,
                                 const FrameConnection& conn, const Window& w,
                                 double tolerance = tol::num);

/// Cartan frame of a phi-geodesic at t: screen = phi tangent, curvature 1,
/// torsion 1/2.
NullFrenetData phi_geodesic_cartan_frame(const Curve& c, const ACBMStructure& s, double t);

struct ConstantCurvatureCheck {
    bool is_const = false;
    double b_const = 0.0;   // representative value of b when constant
    double k1bar = 0.0;     // closed-form constants, valid when is_const
    double k2bar = 0.0;
    double max_b_dot = 0.0;
    double curvature_variation = 0.0;  // spread of measured curvatures over the window
};

/// Both distinguished curvatures are constant exactly when b is constant;
/// when constant, the measured values are checked against the closed-form
/// constants.
ConstantCurvatureCheck constant_curvature_check(const SlantInvariants& inv, const Window& w,
                                                SignConvention signs, double tolerance = tol::num);

struct HelixCheck {
    bool generalized_helix = false;
    double b_const = 0.0;
    double k2bar = 0.0;  // measured torsion under the sign choice giving k1bar = 1
};

/// Generalized-helix test: b constant with b^2 = 1 - a^4, a in [-1,0)u(0,1],
/// checked through the sign orbit that normalizes the first curvature to 1.
HelixCheck is_generalized_helix(const SlantInvariants& inv, const Window& w,
                                double tolerance = tol::num);

/// Null cubic test for Legendre curves with constant b.
bool is_null_cubic(const SlantInvariants& inv, const Window& w, SignConvention signs,
                   double tolerance = tol::alg);

// --- verification ---

struct FrenetResiduals {
    double tangent_eq = 0.0;
    double transversal_eq = 0.0;
    double screen_eq = 0.0;
    double max() const { return std::max({tangent_eq, transversal_eq, screen_eq}); }
};

/// Independent oracle: differentiates the emitted frame fields along the
/// curve and measures the defect of the three Frenet equations over the
/// window. Never uses the closed-form curvature expressions.
FrenetResiduals frenet_residuals(const Curve& c,
                                 const std::function<NullFrenetData(double)>& frames,
                                 const FrameConnection& conn, const Window& w,
                                 int samples = 64);

/// Max defect of the frame normalization relations at a point.
double null_frame_residual(const ACBMStructure& s, const Vec3& pt, const NullFrenetData& f);

}  // namespace nullcurve
