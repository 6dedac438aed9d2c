#include "nullcurve/io.hpp"

#include "nullcurve/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

namespace nullcurve::io {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<double> parse_numbers(const std::string& text, size_t expected,
                                  const std::string& what) {
    std::istringstream in(text);
    std::vector<double> out;
    double v;
    while (in >> v) out.push_back(v);
    if (!in.eof() || out.size() != expected)
        throw ConfigError(what + ": expected " + std::to_string(expected) + " numbers, got '" +
                          text + "'");
    return out;
}

Mat3 parse_mat3(const std::string& text, const std::string& what) {
    const auto v = parse_numbers(text, 9, what);
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = v[static_cast<size_t>(3 * i + j)];
    return m;
}

Vec3 parse_vec3(const std::string& text, const std::string& what) {
    const auto v = parse_numbers(text, 3, what);
    return Vec3(v[0], v[1], v[2]);
}

}  // namespace

Config parse_config(std::istream& in) {
    Config cfg;
    std::string line, section = "";
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("unterminated section header at line " +
                                  std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value at line " + std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key at line " + std::to_string(lineno));
        cfg[section][key] = value;
    }
    return cfg;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_config(in);
}

ACBMStructure structure_from_config(const Config& cfg) {
    const auto sec = cfg.find("manifold");
    if (sec == cfg.end()) throw ConfigError("config has no [manifold] section");
    const auto& kv = sec->second;
    auto need = [&kv](const char* key) -> const std::string& {
        const auto it = kv.find(key);
        if (it == kv.end()) throw ConfigError(std::string("missing manifold key: ") + key);
        return it->second;
    };

    const Mat3 g = parse_mat3(need("metric"), "metric");
    const Mat3 phi = parse_mat3(need("phi"), "phi");
    const Vec3 xi = parse_vec3(need("xi"), "xi");
    const Vec3 eta = parse_vec3(need("eta"), "eta");

    std::array<std::array<Vec3, 3>, 3> br{};
    for (auto& row : br)
        for (auto& v : row) v = Vec3::Zero();
    const std::pair<int, int> pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
    const char* keys[3] = {"bracket_12", "bracket_13", "bracket_23"};
    for (int n = 0; n < 3; ++n) {
        const auto [i, j] = pairs[n];
        br[static_cast<size_t>(i)][static_cast<size_t>(j)] = parse_vec3(need(keys[n]), keys[n]);
        br[static_cast<size_t>(j)][static_cast<size_t>(i)] =
            -br[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    std::string name = "config";
    if (const auto it = kv.find("name"); it != kv.end()) name = it->second;
    return ACBMStructure::constants(g, phi, xi, eta, br, name);
}

namespace {

struct CurveTable {
    std::vector<double> t;
    std::vector<Vec3> pos, vel, acc;
    bool has_acc = false;

    // linear interpolation, clamped at the ends
    Vec3 interp(const std::vector<Vec3>& field, double u) const {
        if (u <= t.front()) return field.front();
        if (u >= t.back()) return field.back();
        const auto it = std::upper_bound(t.begin(), t.end(), u);
        const size_t hi = static_cast<size_t>(it - t.begin());
        const size_t lo = hi - 1;
        const double span = t[hi] - t[lo];
        const double w = span > 0.0 ? (u - t[lo]) / span : 0.0;
        return (1.0 - w) * field[lo] + w * field[hi];
    }
};

}  // namespace

CurveFixture curve_from_csv_stream(std::istream& in, const std::string& origin) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError(origin + ": empty curve table");
    std::string header = line;
    header.erase(std::remove_if(header.begin(), header.end(),
                                [](char c) { return c == ' ' || c == '\r'; }),
                 header.end());
    bool has_acc = false;
    if (header == "t,p1,p2,p3,v1,v2,v3,a1,a2,a3")
        has_acc = true;
    else if (header != "t,p1,p2,p3,v1,v2,v3")
        throw ConfigError(origin + ": unexpected curve table header '" + line + "'");

    auto table = std::make_shared<CurveTable>();
    table->has_acc = has_acc;
    const size_t ncols = has_acc ? 10 : 7;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line.erase(std::remove(line.begin(), line.end(), '\r'), line.end());
        if (trim(line).empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        const auto v = parse_numbers(line, ncols, origin + " line " + std::to_string(lineno));
        if (!table->t.empty() && v[0] <= table->t.back())
            throw ConfigError(origin + ": t column must be strictly increasing");
        table->t.push_back(v[0]);
        table->pos.emplace_back(v[1], v[2], v[3]);
        table->vel.emplace_back(v[4], v[5], v[6]);
        if (has_acc) table->acc.emplace_back(v[7], v[8], v[9]);
    }
    if (table->t.size() < 2) throw ConfigError(origin + ": need at least two samples");

    auto pos = [table](double u) { return table->interp(table->pos, u); };
    auto vel = [table](double u) { return table->interp(table->vel, u); };
    Curve::PathFn acc;
    if (has_acc) acc = [table](double u) { return table->interp(table->acc, u); };
    CurveFixture f{Curve(pos, vel, acc, table->t.front(), table->t.back(), origin), {}};
    return f;
}

CurveFixture curve_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open curve table: " + path);
    return curve_from_csv_stream(in, path);
}

std::string format_double(double v) {
    if (v == 0.0) return "0";  // collapse the sign of zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json to_json(const StructureReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"axiom", c.axiom}, {"max_residual", c.max_residual}, {"pass", c.pass}});
    return json{{"checks", checks}, {"pass", r.pass}};
}

json to_json(const SasakiReport& r) {
    return json{{"covariant_phi_residual", r.max_residual_covariant_phi},
                {"reeb_residual", r.max_residual_reeb},
                {"sasaki_like", r.sasaki_like}};
}

}  // namespace nullcurve::io
