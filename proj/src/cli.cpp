#include "nmv/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "nmv/closed_formulas.hpp"
#include "nmv/engine.hpp"
#include "nmv/error.hpp"
#include "nmv/io.hpp"
#include "nmv/oracle.hpp"

namespace nmv {
namespace {

struct GridFlags {
  std::optional<std::int64_t> offset;
  std::optional<unsigned> width;

  GridOptions merged(const GridOptions& from_file) const {
    return {offset ? offset : from_file.offset, width ? width : from_file.width};
  }
};

void add_grid_flags(CLI::App* cmd, GridFlags& flags) {
  cmd->add_option("--grid-offset", flags.offset, "Offset N0 of every grid axis");
  cmd->add_option("--grid-width", flags.width, "Number of grid points per axis (at least r + 2)");
}

const MapSpec& require_spec(const Problem& problem) {
  if (!problem.spec) throw InputError("this command needs a monomial problem (\"ideals\")");
  return *problem.spec;
}

std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(std::string("bad integer in ") + what + ": \"" + item + "\"");
    }
  }
  return out;
}

Json base_locus_json(const BaseLocusReport& locus) {
  return Json{{"dimension", locus.dimension}, {"points", locus.points}, {"minimal_primes", locus.minimal_primes}};
}

int cmd_monomial(const std::string& file, std::optional<std::string> method, const GridFlags& grid, std::ostream& out) {
  const auto problem = load_problem(file);
  const auto& spec = require_spec(problem);
  const std::string m = method.value_or(problem.method.value_or("both"));
  if (m != "mixed-volume" && m != "oracle" && m != "both") throw InputError("unknown method \"" + m + "\"");
  const GridOptions options = grid.merged(problem.grid);

  Json report;
  std::optional<MultidegreeTable> polytopal, oracle;
  if (m != "oracle") polytopal = monomial_multidegrees(spec);
  if (m != "mixed-volume") {
    auto result = saturated_fiber_mixed_multiplicities(spec, options);
    report["grids"] = grids_json(result.fit);
    oracle = std::move(result.table);
  }
  const MultidegreeTable& table = polytopal ? *polytopal : *oracle;
  report["r"] = spec.r;
  report["p"] = spec.p();
  report["method"] = m;
  report["entries"] = entries_json(table);
  report["generically_finite"] = generic_finiteness_check(spec);
  report["upper_bound_holds"] = upper_bound_check(spec, table);
  report["deg_G_upper_bound_heuristic"] = to_json(table.nonzero_gcd());
  bool consistent = true;
  if (m == "both") {
    consistent = *polytopal == *oracle;
    report["tables"] = Json{{"mixed-volume", entries_json(*polytopal)}, {"oracle", entries_json(*oracle)}};
    report["consistent"] = consistent;
  }
  out << canonical_dump(report);
  return consistent ? kOk : kInternal;
}

int cmd_degree_formula(const std::string& file, const GridFlags& grid, std::ostream& out) {
  const auto problem = load_problem(file);
  const auto& spec = require_spec(problem);
  const auto locus = base_locus(spec);
  const auto formula = degree_formula_table(spec, grid.merged(problem.grid));
  const auto polytopal = monomial_multidegrees(spec);
  Json rows = Json::array();
  for (const auto& [d, v] : formula.table.entries()) {
    rows.push_back(Json{{"type", d},
                        {"delta_power", to_json(formula.delta_powers.at(d))},
                        {"base_locus_multiplicity", to_json(formula.base_mults.at(d))},
                        {"value", to_json(v)}});
  }
  Json report{{"r", spec.r},
              {"p", spec.p()},
              {"method", "degree-formula"},
              {"entries", rows},
              {"base_locus", base_locus_json(locus)},
              {"generically_finite", formula.generically_finite},
              {"agrees_with_mixed_volume", polytopal == formula.table}};
  out << canonical_dump(report);
  return kOk;
}

int cmd_linear(const std::string& file, std::ostream& out) {
  const auto problem = load_problem(file);
  if (!problem.cameras) throw InputError("the linear command needs a \"cameras\" block");
  const auto& config = *problem.cameras;
  const auto support = multidegree_support(config);
  Json points = Json::array();
  for (const auto& q : camera_base_points(config)) {
    Json coords = Json::array();
    for (const auto& c : q) coords.push_back(to_json(c));
    points.push_back(coords);
  }
  Json report = table_json(support, "linear-criterion");
  report["base_points"] = points;
  bool agrees = true;
  const auto spec = coordinate_alignment_export(config);
  report["coordinate_aligned"] = spec.has_value();
  if (spec) {
    const auto oracle = saturated_fiber_mixed_multiplicities(*spec, problem.grid).table;
    const auto polytopal = monomial_multidegrees(*spec);
    report["oracle_agrees"] = oracle == support;
    report["mixed_volume_agrees"] = polytopal == support;
    agrees = oracle == support && polytopal == support;
  }
  out << canonical_dump(report);
  return agrees ? kOk : kInternal;
}

struct FormulaFlags {
  unsigned r = 0;
  std::string deltas;
  std::string mu;
  std::optional<std::int64_t> delta_p;
  std::int64_t mp = 0;
  std::int64_t big_d = 0;
};

int cmd_formula(const std::string& family, const FormulaFlags& flags, std::ostream& out) {
  FamilyInput input;
  input.r = flags.r;
  input.deltas = parse_list(flags.deltas, "--deltas");
  input.delta_p = flags.delta_p;
  MultidegreeTable table;
  if (family == "perfect-ht2") {
    input.family = Family::PerfectHeightTwo;
    input.mu = parse_list(flags.mu, "--mu");
    input.delta_p = perfect_ht2_delta(input);
    table = perfect_ht2_table(input);
  } else if (family == "gorenstein-ht3") {
    input.family = Family::GorensteinHeightThree;
    input.m_p = flags.mp;
    input.big_d = flags.big_d;
    table = gorenstein_ht3_table(input);
  } else {
    throw InputError("unknown family \"" + family + "\"");
  }
  Json report = table_json(table, "closed-formula");
  report["family"] = family;
  report["asserted_hypotheses"] = input.asserted_hypotheses();
  report["delta_p"] = *input.delta_p;
  out << canonical_dump(report);
  return kOk;
}

int cmd_graph(const std::string& file, const GridFlags& grid, std::ostream& out) {
  const auto problem = load_problem(file);
  const auto& spec = require_spec(problem);
  const auto graph = graph_multidegrees(spec, grid.merged(problem.grid));
  Json report = table_json(graph.table, "oracle");
  report["grids"] = grids_json(graph.fit);
  report["slice_d0_zero"] = entries_json(graph.slice);
  report["saturated_fiber"] = entries_json(graph.saturated_fiber);
  report["slice_matches_saturated_fiber"] = graph.slice_matches;
  out << canonical_dump(report);
  return graph.slice_matches ? kOk : kInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multidegrees of monomial and linear rational maps", "nmv"};
  app.require_subcommand(1);

  std::string file;
  std::optional<std::string> method;
  GridFlags grid;

  auto* monomial = app.add_subcommand("monomial", "Multidegree table by mixed volumes and/or the Hilbert oracle");
  monomial->add_option("file", file, "Problem file (JSON)")->required();
  monomial->add_option("--method", method, "mixed-volume, oracle or both")
      ->check(CLI::IsMember({"mixed-volume", "oracle", "both"}));
  add_grid_flags(monomial, grid);

  auto* degree = app.add_subcommand("degree-formula", "Delta powers minus base-locus multiplicities");
  degree->add_option("file", file, "Problem file (JSON)")->required();
  add_grid_flags(degree, grid);

  auto* linear = app.add_subcommand("linear", "Support of the multidegrees of a camera configuration");
  linear->add_option("file", file, "Problem file with a cameras block (JSON)")->required();

  std::string family;
  FormulaFlags formula_flags;
  auto* formula = app.add_subcommand("formula", "Closed multidegree formulas");
  formula->add_option("family", family, "perfect-ht2 or gorenstein-ht3")
      ->required()
      ->check(CLI::IsMember({"perfect-ht2", "gorenstein-ht3"}));
  formula->add_option("--r", formula_flags.r, "Dimension of the source P^r")->required();
  formula->add_option("--deltas", formula_flags.deltas, "delta_1,...,delta_{p-1} (may be empty)");
  formula->add_option("--mu", formula_flags.mu, "Hilbert-Burch column degrees mu_1,...,mu_{m_p}");
  formula->add_option("--delta-p", formula_flags.delta_p, "Generation degree of I_p");
  formula->add_option("--mp", formula_flags.mp, "m_p (Gorenstein family)");
  formula->add_option("--big-d", formula_flags.big_d, "Degree D of the presentation matrix entries");

  auto* graph = app.add_subcommand("graph", "Multidegrees of the graph of the map");
  graph->add_option("file", file, "Problem file (JSON)")->required();
  add_grid_flags(graph, grid);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }

  try {
    if (monomial->parsed()) return cmd_monomial(file, method, grid, out);
    if (degree->parsed()) return cmd_degree_formula(file, grid, out);
    if (linear->parsed()) return cmd_linear(file, out);
    if (formula->parsed()) return cmd_formula(family, formula_flags, out);
    if (graph->parsed()) return cmd_graph(file, grid, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const HypothesisError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return kHypothesis;
  } catch (const StabilityError& e) {
    err << "oracle did not stabilize: " << e.what() << "\n";
    return kStability;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace nmv
