#include "nullcurve/pipeline.hpp"

#include "nullcurve/errors.hpp"
#include "nullcurve/numerics.hpp"

#include <cmath>

namespace nullcurve {

namespace {

std::vector<double> linspace(const Window& w, int n) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        out.push_back(w.t0 + (w.t1 - w.t0) * (n == 1 ? 0.0 : double(i) / (n - 1)));
    return out;
}

std::vector<Vec3> default_samples() {
    return halton_points(32, Vec3(-1, -1, -1), Vec3(1, 1, 1));
}

}  // namespace

NullFrameSeries null_frame_series(const CurveFixture& cf, const ACBMStructure& s,
                                  const FrameConnection& conn, const Window& w, int samples,
                                  SignConvention signs) {
    const Curve curve = cf.curve.restricted(w.t0, w.t1);
    const auto probes = probe_grid(w);
    NullFrameSeries out;
    out.invariants = slant_invariants(curve, s, probes, cf.closures);
    out.legendre = out.invariants.legendre;

    const SlantInvariants& inv = out.invariants;
    auto frame_pair = [&](double t) -> std::pair<NullFrenetData, NullFrenetData> {
        if (inv.legendre) {
            const LegendreFrames lf = legendre_frames(curve, s, inv, t, signs);
            return {lf.F, lf.Fbar};
        }
        return {general_frame_F(curve, s, inv, t, signs),
                distinguished_frame_Fbar(curve, s, inv, t, signs)};
    };

    bool any_geodesic = false;
    for (double t : linspace(w, samples)) {
        NullFrameRow row;
        row.t = t;
        try {
            std::tie(row.F, row.Fbar) = frame_pair(t);
        } catch (const GeodesicPoint&) {
            row.geodesic_point = true;
            any_geodesic = true;
        }
        out.rows.push_back(row);
    }

    if (!any_geodesic) {
        auto f_series = [&frame_pair](double t) { return frame_pair(t).first; };
        auto fbar_series = [&frame_pair](double t) { return frame_pair(t).second; };
        out.residuals_F = frenet_residuals(curve, f_series, conn, w);
        out.residuals_Fbar = frenet_residuals(curve, fbar_series, conn, w);
    } else {
        const double nan = std::nan("");
        out.residuals_F = {nan, nan, nan};
        out.residuals_Fbar = {nan, nan, nan};
    }
    return out;
}

NonNullSeries nonnull_series(const CurveFixture& cf, const ACBMStructure& s, const Window& w,
                             int samples) {
    const Curve curve = cf.curve.restricted(w.t0, w.t1);
    const auto pts = default_samples();
    const FrameConnection conn_t = koszul_connection(s, associated_metric(s), pts);
    const Curve unit = arc_length_reparam(curve, s, MetricTag::GTilde);
    const Window wu = unit.window();

    NonNullSeries out;
    const NonNullApparatus ap = frenet_apparatus(unit, s, conn_t, wu);
    out.order = ap.order;
    out.classification = classify_nonnull(ap.k, ap.tau, wu);
    for (double u : linspace(wu, samples)) out.rows.push_back({u, ap.at(u)});
    return out;
}

ClassificationResult classify_curve(const CurveFixture& cf, const ACBMStructure& s,
                                    const Window& w, int samples) {
    ClassificationResult res;
    const Curve curve = cf.curve.restricted(w.t0, w.t1);
    const auto pts = default_samples();
    const FrameConnection conn = koszul_connection(s, metric_field(s, MetricTag::G), pts);
    const auto probes = probe_grid(w);

    const double mid = 0.5 * (w.t0 + w.t1);
    if (causal_character(curve, s, MetricTag::G, mid) == CausalCharacter::Null)
        res.labels.push_back("null");

    const SlantInvariants inv = slant_invariants(curve, s, probes, cf.closures);
    res.evidence["a"] = inv.a;
    res.evidence["a_deviation"] = inv.a_deviation;
    res.evidence["b_mid"] = inv.b(mid);
    const bool slant = inv.a_deviation <= tol::slant;
    if (slant) res.labels.push_back(inv.legendre ? "legendre" : "slant");

    const double b_mid = inv.b(mid);
    const GeodesicCheck geo =
        is_geodesic_slant(inv.a, inv.b, w, tol::geodesic(inv.a, b_mid), inv.b_dot);
    res.evidence["max_k1"] = geo.max_k1;
    if (geo.geodesic) {
        res.labels.push_back("geodesic");
        if (geo.C1) res.evidence["geodesic_phase"] = *geo.C1;
        return res;
    }

    const SignConvention signs{+1, +1};
    const ConstantCurvatureCheck ccc = constant_curvature_check(inv, w, signs);
    res.evidence["max_b_dot"] = ccc.max_b_dot;
    if (ccc.is_const) {
        res.labels.push_back("constant_curvature");
        res.evidence["b_const"] = ccc.b_const;
        res.evidence["k1bar"] = std::abs(ccc.k1bar);
        res.evidence["k2bar"] = std::abs(ccc.k2bar);
    } else {
        res.evidence["curvature_variation"] = ccc.curvature_variation;
    }

    if (!inv.legendre) {
        const PhiGeodesicCheck pg = is_phi_geodesic(curve, s, conn, w);
        res.evidence["phi_geodesic_residual"] = pg.max_residual;
        if (pg.phi_geodesic) res.labels.push_back("phi_geodesic");

        const HelixCheck hx = is_generalized_helix(inv, w);
        if (hx.generalized_helix) {
            res.labels.push_back("generalized_helix");
            res.evidence["helix_k2bar"] = hx.k2bar;
        }
    } else {
        for (int sgn : {+1, -1}) {
            if (is_null_cubic(inv, w, SignConvention{+1, sgn}, 1e-8)) {
                res.labels.push_back("null_cubic");
                res.evidence["null_cubic_sign"] = sgn;
                break;
            }
        }
    }

    // internal consistency: the emitted frames must satisfy the Frenet system
    const bool analytic = static_cast<bool>(cf.closures.b_dot);
    const double frenet_tol = analytic ? tol::frenet : tol::frenet_fd;
    auto fbar_series = [&](double t) {
        if (inv.legendre) return legendre_frames(curve, s, inv, t, signs).Fbar;
        return distinguished_frame_Fbar(curve, s, inv, t, signs);
    };
    const FrenetResiduals resid = frenet_residuals(curve, fbar_series, conn, w);
    res.evidence["frenet_residual"] = resid.max();
    res.consistent = resid.max() <= frenet_tol;

    // induced behaviour under the associated metric
    try {
        const InducedReport induced = verify_induced_theorems(curve, s, w);
        res.labels.push_back(induced.path == InducedReport::Path::LegendreGeodesic
                                 ? "gtilde_geodesic"
                                 : "gtilde_proper_helix");
        res.consistent = res.consistent && induced.pass;
        const NonNullSeries nn = nonnull_series(cf, s, w, std::max(8, samples / 4));
        res.evidence["gtilde_order"] = nn.order;
        if (nn.order == 3 && !nn.rows.empty()) {
            res.evidence["gtilde_k"] = nn.rows[nn.rows.size() / 2].data.k;
            res.evidence["gtilde_tau"] = nn.rows[nn.rows.size() / 2].data.tau;
        }
    } catch (const PreconditionMismatch&) {
        // curve does not induce one of the structured non-null cases
    }
    return res;
}

}  // namespace nullcurve
