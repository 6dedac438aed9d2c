#pragma once

#include "nullcurve/fixtures.hpp"
#include "nullcurve/frenet_nonnull.hpp"
#include "nullcurve/frenet_null.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nullcurve {

/// One output row of the null-frame pipeline.
struct NullFrameRow {
    double t = 0.0;
    bool geodesic_point = false;  // frame undefined here; values left at zero
    NullFrenetData F;
    NullFrenetData Fbar;
};

struct NullFrameSeries {
    bool legendre = false;
    SlantInvariants invariants;
    std::vector<NullFrameRow> rows;
    FrenetResiduals residuals_F;
    FrenetResiduals residuals_Fbar;
};

/// Evaluates both null frames on a uniform grid and attaches the
/// covariant-derivative residual summary.
NullFrameSeries null_frame_series(const CurveFixture& cf, const ACBMStructure& s,
                                  const FrameConnection& conn, const Window& w, int samples,
                                  SignConvention signs);

struct NonNullRow {
    double s = 0.0;  // arc-length parameter
    NonNullFrenetData data;
};

struct NonNullSeries {
    int order = 1;
    NonNullClass classification = NonNullClass::Generic;
    std::vector<NonNullRow> rows;
};

/// Arc-length reparameterization plus orthonormal apparatus under the
/// associated metric, sampled on a uniform grid.
NonNullSeries nonnull_series(const CurveFixture& cf, const ACBMStructure& s, const Window& w,
                             int samples);

struct ClassificationResult {
    std::vector<std::string> labels;
    std::map<std::string, double> evidence;
    bool consistent = true;  // internal residual oracles within tolerance
};

/// Runs every applicable classifier on the curve (null side under g, induced
/// side under the associated metric) and aggregates labels with numeric
/// evidence.
ClassificationResult classify_curve(const CurveFixture& cf, const ACBMStructure& s,
                                    const Window& w, int samples);

}  // namespace nullcurve
