#pragma once

// JSON problem files and reports.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nmv/hilbert.hpp"
#include "nmv/linear.hpp"
#include "nmv/map_spec.hpp"
#include "nmv/polytope.hpp"

namespace nmv {

using Json = nlohmann::json;

struct Problem {
  /// Empty when generators use indexed names x0, x1, ...
  std::vector<std::string> variables;
  std::optional<MapSpec> spec;
  std::optional<CameraConfig> cameras;
  std::optional<std::string> method;
  GridOptions grid;
};

/// Accepts {"variables": [...], "ideals": [[...], ...]},
/// {"r": r, "ideals": [[...], ...]} with indexed names, or
/// {"r": r, "cameras": [[[...], ...], ...]}; optional "method" and
/// "grid": {"offset": k, "width": w}. Throws InputError.
Problem parse_problem(const Json& doc);
Problem load_problem(const std::filesystem::path& path);

/// Integers as JSON numbers when they fit in 64 bits, as strings otherwise.
Json to_json(const Integer& z);
/// "a/b", or "a" for integers.
Json to_json(const Rational& q);
Json to_json(const LatticePolytope& polytope);
/// [{"type": [...], "value": v}, ...] in table order.
Json entries_json(const MultidegreeTable& table);
/// {"r", "p", "entries", "method"}.
Json table_json(const MultidegreeTable& table, const std::string& method);
Json grids_json(const StableFit& fit);

/// Keys sorted, two-space indent, trailing newline.
std::string canonical_dump(const Json& doc);

}  // namespace nmv
