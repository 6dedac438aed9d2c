#pragma once

#include "nullcurve/curves.hpp"
#include "nullcurve/manifold.hpp"
#include "nullcurve/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace nullcurve {

struct NonNullFrenetData {
    int order = 1;  // osculating order, 1..3
    Vec3 E1 = Vec3::Zero();
    Vec3 E2 = Vec3::Zero();
    Vec3 E3 = Vec3::Zero();
    int eps1 = +1, eps2 = +1, eps3 = +1;
    double k = 0.0;
    double tau = 0.0;
};

/// Frenet fields of a unit-speed curve as functions of the parameter.
/// E2/E3, k, tau are only meaningful up to the detected order.
struct NonNullApparatus {
    int order = 1;
    int eps1 = +1, eps2 = +1, eps3 = +1;
    std::function<Vec3(double)> E1, E2, E3;
    std::function<double(double)> k, tau;

    NonNullFrenetData at(double s) const;
};

/// Reparameterizes by arc length under the chosen metric. Constant-speed
/// inputs use the exact linear substitution; otherwise the arc length is
/// accumulated by trapezoid quadrature and inverted monotonically.
/// Throws NullDirection when the speed degenerates anywhere on the domain.
Curve arc_length_reparam(const Curve& c, const ACBMStructure& s, MetricTag tag);

/// Builds the orthonormal Frenet apparatus of a unit-speed curve under the
/// associated metric, detecting the osculating order over the window.
/// Signs of the higher fields are chosen so that curvature and torsion are
/// positive.
NonNullApparatus frenet_apparatus(const Curve& unit_speed, const ACBMStructure& s,
                                  const FrameConnection& conn_tilde, const Window& w);

NonNullClass classify_nonnull(const std::function<double(double)>& k_fn,
                              const std::function<double(double)>& tau_fn, const Window& w,
                              double tolerance = tol::num);

std::string to_string(NonNullClass c);

struct InducedCheck {
    std::string name;
    double residual = 0.0;
    bool pass = false;
};

struct InducedReport {
    // Which branch applied: constant-b Legendre (geodesic under the associated
    // metric) or b = 0 slant (proper helix of unit curvature and torsion).
    enum class Path { LegendreGeodesic, SlantProperHelix } path;
    std::vector<InducedCheck> checks;
    bool pass = false;
};

/// Verifies the induced-curve statements for a null curve under the
/// associated metric. Throws PreconditionMismatch when the curve is neither
/// a constant-b Legendre nor a b = 0 slant null curve.
InducedReport verify_induced_theorems(const Curve& c_null, const ACBMStructure& s,
                                      const Window& w);

}  // namespace nullcurve
