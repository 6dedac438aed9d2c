#pragma once

#include "nullcurve/curves.hpp"
#include "nullcurve/manifold.hpp"

#include <string>

namespace nullcurve {

struct CurveFixture {
    Curve curve;
    SlantClosures closures;
};

// --- built-in manifolds ---

/// Product-manifold structure over the cylinder chart: frame metric
/// diag(1,-1,1), phi rotating the contact plane, Reeb field e3.
ACBMStructure product_manifold();

/// Left-invariant structure of the solvable group; same frame data as the
/// product manifold (both realize the same local geometry).
ACBMStructure solvable_group();

/// Chart-level realization of the product manifold on R^3 = {(x, y, z)}:
/// position-dependent coordinate metric and frame fields. Frame data derived
/// from it reproduces the constant fixture up to differentiation error.
ACBMStructure product_manifold_chart();

/// Frame data computed from a chart-level structure description: chart
/// metric, chart phi, and frame fields (columns = chart components).
ACBMStructure frame_structure_from_chart(const ACBMStructure::MatFn& chart_metric,
                                         const ACBMStructure::MatFn& chart_phi,
                                         const ACBMStructure::MatFn& frame_fields,
                                         const Vec3& xi_frame, std::string name = {});

ACBMStructure structure_by_name(const std::string& name);

// --- built-in curves ---

/// Slant null curve with hyperbolic components and non-constant b.
CurveFixture example_a();
/// Slant null phi-geodesic: constant components (0, 1, -1), a = -1, b = 0.
CurveFixture example_b();
/// Legendre null cubic: constant components (sqrt2/2, -sqrt2/2, 0), b = 1.
CurveFixture example_c();
/// Constant-component group curve with slant invariants (a, b).
CurveFixture liegroup_slant(double a, double b, double t0 = -2.0, double t1 = 2.0);

/// Resolves "example_a" | "example_b" | "example_c" |
/// "liegroup_slant(a,b)".
CurveFixture curve_by_name(const std::string& name);

}  // namespace nullcurve
