#pragma once

#include "nullcurve/fixtures.hpp"
#include "nullcurve/manifold.hpp"

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <string>

namespace nullcurve::io {

using json = nlohmann::json;

/// Flat key = value configuration with [section] headers.
using Config = std::map<std::string, std::map<std::string, std::string>>;

Config parse_config(std::istream& in);
Config parse_config_file(const std::string& path);

/// Constant structure from a [manifold] section with keys metric (9 numbers,
/// row major), phi (9), xi (3), eta (3), bracket_12 / bracket_13 / bracket_23
/// (3 each). Throws ConfigError on malformed input.
ACBMStructure structure_from_config(const Config& cfg);

/// Sampled curve from a CSV table with header
/// t,p1,p2,p3,v1,v2,v3[,a1,a2,a3]; rows must be sorted by t. Values are
/// interpolated linearly between samples.
CurveFixture curve_from_csv(const std::string& path);
CurveFixture curve_from_csv_stream(std::istream& in, const std::string& origin);

/// Round-trip-safe rendering used by every CSV/table writer.
std::string format_double(double v);

json to_json(const StructureReport& r);
json to_json(const SasakiReport& r);

}  // namespace nullcurve::io
