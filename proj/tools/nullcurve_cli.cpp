#include "nullcurve/errors.hpp"
#include "nullcurve/io.hpp"
#include "nullcurve/lie_group.hpp"
#include "nullcurve/numerics.hpp"
#include "nullcurve/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace nc = nullcurve;
using nc::io::format_double;
using nc::io::json;

namespace {

struct Options {
    std::string manifold = "product_manifold";
    std::string curve;
    std::string metric = "g";
    std::string window = "-2:2";
    int samples = 64;
    int eps = +1;
    int eps1 = +1;
    std::string out;
    std::string format = "table";
    double a = 1.0;
    double b = 0.0;
};

unsigned sample_seed() {
    if (const char* env = std::getenv("NULLCURVE_SEED")) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            throw nc::ConfigError("NULLCURVE_SEED must be an unsigned integer");
        }
    }
    return 0;
}

nc::Window parse_window(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw nc::ConfigError("window must be given as t0:t1, got '" + text + "'");
    try {
        const double t0 = std::stod(text.substr(0, colon));
        const double t1 = std::stod(text.substr(colon + 1));
        if (!(t0 < t1)) throw nc::ConfigError("window requires t0 < t1");
        return {t0, t1};
    } catch (const std::invalid_argument&) {
        throw nc::ConfigError("malformed window '" + text + "'");
    }
}

nc::ACBMStructure resolve_manifold(const std::string& spec) {
    try {
        return nc::structure_by_name(spec);
    } catch (const nc::ConfigError&) {
        return nc::io::structure_from_config(nc::io::parse_config_file(spec));
    }
}

nc::CurveFixture resolve_curve(const std::string& spec) {
    if (spec.empty()) throw nc::ConfigError("a curve must be given via --curve");
    try {
        return nc::curve_by_name(spec);
    } catch (const nc::ConfigError&) {
        if (spec.size() > 4 && spec.substr(spec.size() - 4) == ".csv")
            return nc::io::curve_from_csv(spec);
        throw;
    }
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw nc::ConfigError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void validate(const Options& opt) {
    if (opt.samples < 8) throw nc::ConfigError("--samples must be at least 8");
    if (opt.eps != 1 && opt.eps != -1) throw nc::ConfigError("--eps must be +1 or -1");
    if (opt.eps1 != 1 && opt.eps1 != -1) throw nc::ConfigError("--eps1 must be +1 or -1");
    if (opt.format != "json" && opt.format != "csv" && opt.format != "table")
        throw nc::ConfigError("--format must be json, csv or table");
    if (opt.metric != "g" && opt.metric != "gtilde")
        throw nc::ConfigError("--metric must be g or gtilde");
}

int cmd_verify(const Options& opt) {
    validate(opt);
    const nc::ACBMStructure s = resolve_manifold(opt.manifold);
    const auto pts =
        nc::halton_points(std::max(opt.samples, 32), nc::Vec3(-1, -1, -1), nc::Vec3(1, 1, 1),
                          sample_seed());
    const nc::StructureReport rep = nc::verify_structure(s, pts);
    const nc::FrameConnection conn =
        nc::koszul_connection(s, nc::metric_field(s, nc::MetricTag::G), pts);
    const nc::SasakiReport sas = nc::is_sasaki_like(s, conn, pts);

    Output out(opt.out);
    if (opt.format == "json") {
        json j = nc::io::to_json(rep);
        j["sasaki"] = nc::io::to_json(sas);
        j["manifold"] = s.name();
        out.stream() << j.dump(2) << '\n';
    } else {
        out.stream() << "# manifold: " << s.name() << '\n';
        for (const auto& c : rep.checks)
            out.stream() << (opt.format == "csv" ? c.axiom + "," + format_double(c.max_residual) +
                                                       "," + (c.pass ? "pass" : "fail")
                                                 : c.axiom + "  " + format_double(c.max_residual) +
                                                       "  " + (c.pass ? "pass" : "fail"))
                         << '\n';
        const std::string sep = opt.format == "csv" ? "," : "  ";
        out.stream() << "sasaki_covariant_phi" << sep
                     << format_double(sas.max_residual_covariant_phi) << sep
                     << (sas.sasaki_like ? "pass" : "fail") << '\n';
        out.stream() << "sasaki_reeb" << sep << format_double(sas.max_residual_reeb) << sep
                     << (sas.sasaki_like ? "pass" : "fail") << '\n';
    }
    return rep.pass && sas.sasaki_like ? 0 : 1;
}

json frame_record(double t, const nc::NullFrenetData& f) {
    auto vec = [](const nc::Vec3& v) { return json::array({v[0], v[1], v[2]}); };
    return json{{"t", t},
                {"tangent", vec(f.tangent)},
                {"N", vec(f.N)},
                {"W", vec(f.W)},
                {"h", f.h},
                {"k1", f.k1},
                {"k2", f.k2},
                {"frame_kind",
                 f.frame_kind == nc::FrameKind::GeneralF ? "general" : "distinguished"}};
}

int cmd_frenet(const Options& opt) {
    validate(opt);
    const nc::ACBMStructure s = resolve_manifold(opt.manifold);
    const nc::CurveFixture cf = resolve_curve(opt.curve);
    const nc::Window w = parse_window(opt.window);
    Output out(opt.out);

    if (opt.metric == "gtilde") {
        const nc::NonNullSeries series = nc::nonnull_series(cf, s, w, opt.samples);
        if (opt.format == "json") {
            json rows = json::array();
            auto vec = [](const nc::Vec3& v) { return json::array({v[0], v[1], v[2]}); };
            for (const auto& r : series.rows)
                rows.push_back({{"s", r.s},
                                {"E1", vec(r.data.E1)},
                                {"E2", vec(r.data.E2)},
                                {"E3", vec(r.data.E3)},
                                {"k", r.data.k},
                                {"tau", r.data.tau},
                                {"order", r.data.order},
                                {"eps", json::array({r.data.eps1, r.data.eps2, r.data.eps3})}});
            out.stream() << json{{"curve", cf.curve.name()},
                                 {"order", series.order},
                                 {"class", nc::to_string(series.classification)},
                                 {"series", rows}}
                                .dump(2)
                         << '\n';
        } else {
            const char* sep = opt.format == "csv" ? "," : "  ";
            out.stream() << "# curve: " << cf.curve.name() << "  order: " << series.order
                         << "  class: " << nc::to_string(series.classification) << '\n';
            out.stream() << "s" << sep << "k" << sep << "tau" << sep << "order" << '\n';
            for (const auto& r : series.rows)
                out.stream() << format_double(r.s) << sep << format_double(r.data.k) << sep
                             << format_double(r.data.tau) << sep << r.data.order << '\n';
        }
        return 0;
    }

    const auto pts = nc::halton_points(32, nc::Vec3(-1, -1, -1), nc::Vec3(1, 1, 1),
                                       sample_seed());
    const nc::FrameConnection conn =
        nc::koszul_connection(s, nc::metric_field(s, nc::MetricTag::G), pts);
    const nc::NullFrameSeries series =
        nc::null_frame_series(cf, s, conn, w, opt.samples, {opt.eps, opt.eps1});

    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& r : series.rows) {
            if (r.geodesic_point) {
                rows.push_back({{"t", r.t}, {"geodesic_point", true}});
                continue;
            }
            rows.push_back(frame_record(r.t, r.F));
            rows.push_back(frame_record(r.t, r.Fbar));
        }
        out.stream() << json{{"curve", cf.curve.name()},
                             {"legendre", series.legendre},
                             {"a", series.invariants.a},
                             {"residuals",
                              {{"F", series.residuals_F.max()},
                               {"Fbar", series.residuals_Fbar.max()}}},
                             {"series", rows}}
                            .dump(2)
                     << '\n';
    } else {
        const char* sep = opt.format == "csv" ? "," : "  ";
        out.stream() << "# curve: " << cf.curve.name() << "  a: " << format_double(series.invariants.a)
                     << (series.legendre ? "  (legendre)" : "") << '\n';
        out.stream() << "# max frenet residual: F " << format_double(series.residuals_F.max())
                     << "  Fbar " << format_double(series.residuals_Fbar.max()) << '\n';
        out.stream() << "t" << sep << "h" << sep << "k1" << sep << "k2" << sep << "k1bar" << sep
                     << "k2bar" << sep << "flag" << '\n';
        for (const auto& r : series.rows) {
            if (r.geodesic_point) {
                out.stream() << format_double(r.t) << sep << sep << sep << sep << sep
                             << sep << "geodesic" << '\n';
                continue;
            }
            out.stream() << format_double(r.t) << sep << format_double(r.F.h) << sep
                         << format_double(r.F.k1) << sep << format_double(r.F.k2) << sep
                         << format_double(r.Fbar.k1) << sep << format_double(r.Fbar.k2) << sep
                         << "ok" << '\n';
        }
    }
    return 0;
}

int cmd_classify(const Options& opt) {
    validate(opt);
    const nc::ACBMStructure s = resolve_manifold(opt.manifold);
    const nc::CurveFixture cf = resolve_curve(opt.curve);
    const nc::Window w = parse_window(opt.window);

    const nc::ClassificationResult res = nc::classify_curve(cf, s, w, opt.samples);
    Output out(opt.out);
    if (opt.format == "json") {
        json evidence = json::object();
        for (const auto& [k, v] : res.evidence) evidence[k] = v;
        out.stream() << json{{"curve", cf.curve.name()},
                             {"manifold", s.name()},
                             {"class_labels", res.labels},
                             {"evidence", evidence},
                             {"consistent", res.consistent}}
                            .dump(2)
                     << '\n';
    } else {
        out.stream() << "# curve: " << cf.curve.name() << "  manifold: " << s.name() << '\n';
        out.stream() << "labels:";
        for (const auto& l : res.labels) out.stream() << ' ' << l;
        out.stream() << '\n';
        for (const auto& [k, v] : res.evidence)
            out.stream() << k << (opt.format == "csv" ? "," : " = ") << format_double(v) << '\n';
        out.stream() << "consistent" << (opt.format == "csv" ? "," : " = ")
                     << (res.consistent ? "true" : "false") << '\n';
    }
    return res.consistent ? 0 : 1;
}

int cmd_liegroup(const Options& opt) {
    validate(opt);
    if (std::abs(opt.a) <= nc::tol::alg && std::abs(opt.b) <= nc::tol::alg)
        throw nc::ConfigError("liegroup requires (a, b) != (0, 0)");
    const nc::Window w = parse_window(opt.window);
    const nc::TangentSpec spec = nc::slant_null_tangent(opt.a, opt.b);
    const nc::LieFrame frame = nc::lie_frame_Fbar(opt.a, opt.b);
    const bool limit_path = std::abs(opt.a) <= nc::tol::alg;

    auto matrix_at = [&](double t) {
        if (limit_path) return nc::group_exp(nc::ad_matrix(t * spec.vec()));
        return nc::adjoint_curve(opt.a, opt.b, t);
    };

    Output out(opt.out);
    if (opt.format == "json") {
        json rows = json::array();
        for (int i = 0; i < opt.samples; ++i) {
            const double t =
                w.t0 + (w.t1 - w.t0) * (opt.samples == 1 ? 0.0 : double(i) / (opt.samples - 1));
            const nc::Mat3 m = matrix_at(t);
            json entries = json::array();
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) entries.push_back(m(r, c));
            rows.push_back({{"t", t}, {"Ad", entries}});
        }
        out.stream() << json{{"tangent", {{"a", spec.a}, {"b", spec.b}, {"p", spec.p},
                                          {"q", spec.q}, {"r", spec.r}, {"eps", spec.eps}}},
                             {"k1bar", frame.k1bar},
                             {"k2bar", frame.k2bar},
                             {"limit_path", limit_path},
                             {"trajectory", rows}}
                            .dump(2)
                     << '\n';
    } else {
        const char* sep = opt.format == "csv" ? "," : "  ";
        out.stream() << "# tangent p=" << format_double(spec.p) << " q=" << format_double(spec.q)
                     << " r=" << format_double(spec.r) << " eps=" << spec.eps << '\n';
        out.stream() << "# k1bar=" << format_double(frame.k1bar)
                     << " k2bar=" << format_double(frame.k2bar)
                     << (limit_path ? " (exponential limit path, a = 0)" : "") << '\n';
        out.stream() << "t";
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) out.stream() << sep << 'm' << r << c;
        out.stream() << '\n';
        for (int i = 0; i < opt.samples; ++i) {
            const double t =
                w.t0 + (w.t1 - w.t0) * (opt.samples == 1 ? 0.0 : double(i) / (opt.samples - 1));
            const nc::Mat3 m = matrix_at(t);
            out.stream() << format_double(t);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) out.stream() << sep << format_double(m(r, c));
            out.stream() << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frenet apparatus of slant and Legendre null curves on Sasaki-like "
                 "almost contact B-metric 3-manifolds"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* cmd, bool needs_curve) {
        cmd->add_option("--manifold", opt.manifold, "fixture name or config file");
        if (needs_curve)
            cmd->add_option("--curve", opt.curve, "fixture name or CSV sample table");
        cmd->add_option("--metric", opt.metric, "g | gtilde");
        cmd->add_option("--window", opt.window, "parameter window t0:t1");
        cmd->add_option("--samples", opt.samples, "number of output samples (>= 8)");
        cmd->add_option("--eps", opt.eps, "screen sign (+1 | -1)");
        cmd->add_option("--eps1", opt.eps1, "distinguished screen sign (+1 | -1)");
        cmd->add_option("--out", opt.out, "output path (stdout when omitted)");
        cmd->add_option("--format", opt.format, "json | csv | table");
    };

    CLI::App* verify = app.add_subcommand("verify", "check the structural axioms");
    add_common(verify, false);
    CLI::App* frenet = app.add_subcommand("frenet", "frame series and curvature functions");
    add_common(frenet, true);
    CLI::App* classify = app.add_subcommand("classify", "label a curve with evidence");
    add_common(classify, true);
    CLI::App* liegroup = app.add_subcommand("liegroup", "adjoint matrix trajectory");
    add_common(liegroup, false);
    liegroup->add_option("--a", opt.a, "slant invariant a");
    liegroup->add_option("--b", opt.b, "contact angle invariant b");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // the trajectory command emits CSV unless asked otherwise
    if (liegroup->parsed() && liegroup->get_option("--format")->count() == 0)
        opt.format = "csv";

    try {
        if (verify->parsed()) return cmd_verify(opt);
        if (frenet->parsed()) return cmd_frenet(opt);
        if (classify->parsed()) return cmd_classify(opt);
        if (liegroup->parsed()) return cmd_liegroup(opt);
    } catch (const nc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const nc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
