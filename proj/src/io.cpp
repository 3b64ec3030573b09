#include "nmv/io.hpp"

#include <fstream>
#include <limits>

#include "nmv/error.hpp"

namespace nmv {
namespace {

Rational parse_entry(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError("matrix entries must be integers or rational strings");
}

std::int64_t get_int(const Json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) throw InputError(std::string("\"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

Problem parse_problem(const Json& doc) {
  if (!doc.is_object()) throw InputError("problem file must be a JSON object");
  Problem problem;
  const bool has_ideals = doc.contains("ideals");
  const bool has_cameras = doc.contains("cameras");
  if (has_ideals == has_cameras) throw InputError("problem file needs exactly one of \"ideals\" and \"cameras\"");

  std::optional<std::int64_t> r;
  if (doc.contains("r")) {
    r = get_int(doc, "r");
    if (*r < 1) throw InputError("\"r\" must be at least 1");
  }
  if (doc.contains("variables")) {
    const auto& vars = doc.at("variables");
    if (!vars.is_array() || vars.empty()) throw InputError("\"variables\" must be a nonempty list of names");
    for (const auto& v : vars) {
      if (!v.is_string()) throw InputError("variable names must be strings");
      problem.variables.push_back(v.get<std::string>());
    }
    if (r && static_cast<std::size_t>(*r + 1) != problem.variables.size()) {
      throw InputError("\"r\" does not match the number of variables");
    }
    r = static_cast<std::int64_t>(problem.variables.size()) - 1;
    if (*r < 1) throw InputError("at least two variables are required");
  }
  if (!r) throw InputError("problem file needs \"variables\" or \"r\"");

  if (doc.contains("method")) {
    if (!doc.at("method").is_string()) throw InputError("\"method\" must be a string");
    problem.method = doc.at("method").get<std::string>();
  }
  if (doc.contains("grid")) {
    const auto& grid = doc.at("grid");
    if (!grid.is_object()) throw InputError("\"grid\" must be an object");
    if (grid.contains("offset")) problem.grid.offset = get_int(grid, "offset");
    if (grid.contains("width")) {
      const auto w = get_int(grid, "width");
      if (w < 1) throw InputError("grid width must be positive");
      problem.grid.width = static_cast<unsigned>(w);
    }
  }

  const std::size_t vars = static_cast<std::size_t>(*r + 1);
  if (has_ideals) {
    const auto& ideals = doc.at("ideals");
    if (!ideals.is_array() || ideals.empty()) throw InputError("\"ideals\" must be a nonempty list");
    std::vector<MonomialIdeal> parsed;
    for (const auto& gens : ideals) {
      if (!gens.is_array() || gens.empty()) throw InputError("each ideal must be a nonempty list of generators");
      std::vector<ExponentVector> exps;
      for (const auto& g : gens) {
        if (!g.is_string()) throw InputError("generators must be strings");
        exps.push_back(parse_monomial(g.get<std::string>(), problem.variables, vars));
      }
      // Equigeneration is checked on the raw list, before minimalization
      // could hide a generator of the wrong degree.
      for (const auto& e : exps) {
        if (e.total_degree() != exps.front().total_degree()) {
          throw InputError("ideal " + std::to_string(parsed.size() + 1) + " is not equigenerated");
        }
      }
      parsed.push_back(minimalize(vars, std::move(exps)));
    }
    problem.spec = MapSpec::from_ideals(std::move(parsed));
  } else {
    const auto& cams = doc.at("cameras");
    if (!cams.is_array() || cams.empty()) throw InputError("\"cameras\" must be a nonempty list of matrices");
    CameraConfig config;
    config.r = static_cast<unsigned>(*r);
    for (const auto& cam : cams) {
      if (!cam.is_array()) throw InputError("each camera must be a list of rows");
      RationalMatrix m;
      for (const auto& row : cam) {
        if (!row.is_array()) throw InputError("each camera row must be a list");
        m.emplace_back();
        for (const auto& v : row) m.back().push_back(parse_entry(v));
      }
      config.cameras.push_back(std::move(m));
    }
    config.validate();
    problem.cameras = std::move(config);
  }
  return problem;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  try {
    return parse_problem(doc);
  } catch (const Json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Json to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return Json(z.convert_to<std::int64_t>());
  }
  return Json(to_string(z));
}

Json to_json(const Rational& q) { return Json(to_string(q)); }

Json to_json(const LatticePolytope& polytope) {
  Json vertices = Json::array();
  for (const auto& v : polytope.vertices()) vertices.push_back(v);
  return Json{{"vertices", vertices}};
}

Json entries_json(const MultidegreeTable& table) {
  Json out = Json::array();
  for (const auto& [d, v] : table.entries()) out.push_back(Json{{"type", d}, {"value", to_json(v)}});
  return out;
}

Json table_json(const MultidegreeTable& table, const std::string& method) {
  return Json{{"r", table.r()}, {"p", table.p()}, {"entries", entries_json(table)}, {"method", method}};
}

Json grids_json(const StableFit& fit) {
  return Json{{"offsets", fit.grid.offsets},
              {"shifted_offsets", fit.shifted.offsets},
              {"width", fit.grid.width},
              {"escalated", fit.escalated}};
}

std::string canonical_dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace nmv
