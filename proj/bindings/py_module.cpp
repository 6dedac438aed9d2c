#include "nullcurve/errors.hpp"
#include "nullcurve/fixtures.hpp"
#include "nullcurve/frenet_nonnull.hpp"
#include "nullcurve/frenet_null.hpp"
#include "nullcurve/io.hpp"
#include "nullcurve/lie_group.hpp"
#include "nullcurve/numerics.hpp"
#include "nullcurve/pipeline.hpp"

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace nullcurve;

namespace {

std::vector<Vec3> default_points(int n, unsigned seed) {
    return halton_points(n, Vec3(-1, -1, -1), Vec3(1, 1, 1), seed);
}

FrameConnection make_connection(const ACBMStructure& s, const std::string& metric,
                                unsigned seed) {
    const auto pts = default_points(32, seed);
    if (metric == "g") return koszul_connection(s, metric_field(s, MetricTag::G), pts);
    if (metric == "gtilde") return koszul_connection(s, associated_metric(s), pts);
    throw ConfigError("metric must be 'g' or 'gtilde'");
}

SlantInvariants invariants(const CurveFixture& f, const ACBMStructure& s, double t0,
                           double t1) {
    return slant_invariants(f.curve, s, probe_grid({t0, t1}), f.closures);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Frenet apparatus of slant and Legendre null curves on Sasaki-like "
              "almost contact B-metric 3-manifolds";

    py::register_exception<Error>(m, "NullCurveError");

    py::class_<ACBMStructure>(m, "Structure")
        .def_property_readonly("name", &ACBMStructure::name)
        .def("metric", &ACBMStructure::metric, py::arg("pt") = Vec3(0, 0, 0))
        .def("phi", &ACBMStructure::phi, py::arg("pt") = Vec3(0, 0, 0))
        .def("xi", &ACBMStructure::xi, py::arg("pt") = Vec3(0, 0, 0))
        .def("eta", &ACBMStructure::eta, py::arg("pt") = Vec3(0, 0, 0))
        .def("associated_metric",
             [](const ACBMStructure& s, const Vec3& pt) {
                 return associated_metric(s).value(pt);
             },
             py::arg("pt") = Vec3(0, 0, 0));

    py::class_<CurveFixture>(m, "Curve")
        .def_property_readonly("name",
                               [](const CurveFixture& f) { return f.curve.name(); })
        .def_property_readonly("t0", [](const CurveFixture& f) { return f.curve.t0(); })
        .def_property_readonly("t1", [](const CurveFixture& f) { return f.curve.t1(); })
        .def("position", [](const CurveFixture& f, double t) { return f.curve.position(t); })
        .def("velocity", [](const CurveFixture& f, double t) { return f.curve.velocity(t); });

    py::class_<NullFrenetData>(m, "NullFrame")
        .def_readonly("tangent", &NullFrenetData::tangent)
        .def_readonly("N", &NullFrenetData::N)
        .def_readonly("W", &NullFrenetData::W)
        .def_readonly("h", &NullFrenetData::h)
        .def_readonly("k1", &NullFrenetData::k1)
        .def_readonly("k2", &NullFrenetData::k2)
        .def_property_readonly("distinguished", [](const NullFrenetData& f) {
            return f.frame_kind == FrameKind::DistinguishedFbar;
        });

    py::class_<TangentSpec>(m, "TangentSpec")
        .def_readonly("a", &TangentSpec::a)
        .def_readonly("b", &TangentSpec::b)
        .def_readonly("p", &TangentSpec::p)
        .def_readonly("q", &TangentSpec::q)
        .def_readonly("r", &TangentSpec::r)
        .def_readonly("eps", &TangentSpec::eps)
        .def_property_readonly("vec", &TangentSpec::vec);

    py::class_<LieFrame>(m, "LieFrame")
        .def_readonly("tangent", &LieFrame::tangent)
        .def_readonly("Wbar", &LieFrame::Wbar)
        .def_readonly("Nbar", &LieFrame::Nbar)
        .def_readonly("k1bar", &LieFrame::k1bar)
        .def_readonly("k2bar", &LieFrame::k2bar);

    m.def("structure", &structure_by_name, py::arg("name"),
          "built-in manifold fixture by name");
    m.def("curve", &curve_by_name, py::arg("name"),
          "built-in curve fixture: example_a | example_b | example_c | "
          "liegroup_slant(a,b)");
    m.def("curve_from_csv", &io::curve_from_csv, py::arg("path"));

    m.def(
        "verify_structure",
        [](const ACBMStructure& s, int samples, unsigned seed) {
            const auto pts = default_points(samples, seed);
            const StructureReport rep = verify_structure(s, pts);
            const FrameConnection conn =
                koszul_connection(s, metric_field(s, MetricTag::G), pts);
            const SasakiReport sas = is_sasaki_like(s, conn, pts);
            py::dict out;
            out["pass"] = rep.pass && sas.sasaki_like;
            py::dict checks;
            for (const auto& c : rep.checks) checks[c.axiom.c_str()] = c.max_residual;
            checks["sasaki_covariant_phi"] = sas.max_residual_covariant_phi;
            checks["sasaki_reeb"] = sas.max_residual_reeb;
            out["residuals"] = checks;
            return out;
        },
        py::arg("structure"), py::arg("samples") = 32, py::arg("seed") = 0);

    m.def(
        "connection_coefficients",
        [](const ACBMStructure& s, const std::string& metric, const Vec3& pt, unsigned seed) {
            const Gamma3 g = make_connection(s, metric, seed)(pt);
            return std::array<Mat3, 3>{g[0], g[1], g[2]};
        },
        py::arg("structure"), py::arg("metric") = "g", py::arg("pt") = Vec3(0, 0, 0),
        py::arg("seed") = 0,
        "list of three matrices; entry [i](k, j) multiplies e_k in the derivative of "
        "e_j along e_i");

    m.def(
        "slant_data",
        [](const CurveFixture& f, const ACBMStructure& s, double t0, double t1) {
            const SlantInvariants inv = invariants(f, s, t0, t1);
            py::dict out;
            out["a"] = inv.a;
            out["a_deviation"] = inv.a_deviation;
            out["legendre"] = inv.legendre;
            out["b"] = py::cpp_function(inv.b);
            out["b_dot"] = py::cpp_function(inv.b_dot);
            return out;
        },
        py::arg("curve"), py::arg("structure"), py::arg("t0"), py::arg("t1"));

    m.def(
        "frame_F",
        [](const CurveFixture& f, const ACBMStructure& s, double t, int eps, int eps1,
           double t0, double t1) {
            const SlantInvariants inv = invariants(f, s, t0, t1);
            if (inv.legendre) return legendre_frames(f.curve, s, inv, t, {eps, eps1}).F;
            return general_frame_F(f.curve, s, inv, t, {eps, eps1});
        },
        py::arg("curve"), py::arg("structure"), py::arg("t"), py::arg("eps") = 1,
        py::arg("eps1") = 1, py::arg("t0") = -2.0, py::arg("t1") = 2.0);

    m.def(
        "frame_Fbar",
        [](const CurveFixture& f, const ACBMStructure& s, double t, int eps, int eps1,
           double t0, double t1) {
            const SlantInvariants inv = invariants(f, s, t0, t1);
            if (inv.legendre) return legendre_frames(f.curve, s, inv, t, {eps, eps1}).Fbar;
            return distinguished_frame_Fbar(f.curve, s, inv, t, {eps, eps1});
        },
        py::arg("curve"), py::arg("structure"), py::arg("t"), py::arg("eps") = 1,
        py::arg("eps1") = 1, py::arg("t0") = -2.0, py::arg("t1") = 2.0);

    m.def(
        "classify",
        [](const CurveFixture& f, const ACBMStructure& s, double t0, double t1, int samples) {
            const ClassificationResult r = classify_curve(f, s, {t0, t1}, samples);
            py::dict out;
            out["labels"] = r.labels;
            out["consistent"] = r.consistent;
            py::dict ev;
            for (const auto& [k, v] : r.evidence) ev[k.c_str()] = v;
            out["evidence"] = ev;
            return out;
        },
        py::arg("curve"), py::arg("structure"), py::arg("t0") = -2.0, py::arg("t1") = 2.0,
        py::arg("samples") = 64);

    m.def(
        "nonnull_apparatus",
        [](const CurveFixture& f, const ACBMStructure& s, double t0, double t1, double at) {
            const auto pts = default_points(32, 0);
            const FrameConnection conn_t = koszul_connection(s, associated_metric(s), pts);
            const Curve unit =
                arc_length_reparam(f.curve.restricted(t0, t1), s, MetricTag::GTilde);
            const NonNullApparatus ap = frenet_apparatus(unit, s, conn_t, unit.window());
            const double mid = 0.5 * (unit.t0() + unit.t1());
            const NonNullFrenetData d = ap.at(std::isnan(at) ? mid : at);
            py::dict out;
            out["order"] = d.order;
            out["k"] = d.k;
            out["tau"] = d.tau;
            out["E1"] = d.E1;
            out["E2"] = d.E2;
            out["E3"] = d.E3;
            out["eps"] = std::array<int, 3>{d.eps1, d.eps2, d.eps3};
            out["classification"] =
                to_string(classify_nonnull(ap.k, ap.tau, unit.window()));
            return out;
        },
        py::arg("curve"), py::arg("structure"), py::arg("t0") = -2.0, py::arg("t1") = 2.0,
        py::arg("at") = std::nan(""));

    // solvable-group operations
    m.def("ad_matrix", &ad_matrix, py::arg("x"));
    m.def("group_exp", &group_exp, py::arg("A"));
    m.def("slant_null_tangent", &slant_null_tangent, py::arg("a"), py::arg("b"));
    m.def("helix_tangent", &helix_tangent, py::arg("a"), py::arg("eps") = 1);
    m.def("adjoint_curve", &adjoint_curve, py::arg("a"), py::arg("b"), py::arg("t"));
    m.def("lie_frame", &lie_frame_Fbar, py::arg("a"), py::arg("b"));

    m.attr("__version__") = "0.1.0";
}
