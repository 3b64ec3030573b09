#include "nmv/engine.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nmv/error.hpp"
#include "nmv/oracle.hpp"
#include "products.hpp"

namespace nmv {
namespace {

using VariableSet = std::vector<std::size_t>;

bool subset(const VariableSet& a, const VariableSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

/// Minimal sets of variables meeting the support of every generator.
std::vector<VariableSet> minimal_hitting_sets(const MonomialIdeal& I) {
  const std::size_t vars = I.ambient_vars();
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.generators()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < vars; ++i) {
      if (g[i] > 0) s |= std::uint32_t{1} << i;
    }
    supports.push_back(s);
  }
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << vars); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<std::uint32_t> found;
  for (auto m : masks) {
    if (!std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & m) != 0; })) continue;
    if (std::any_of(found.begin(), found.end(), [&](std::uint32_t f) { return (f & m) == f; })) continue;
    found.push_back(m);
  }
  std::vector<VariableSet> out;
  for (auto m : found) {
    VariableSet s;
    for (std::size_t i = 0; i < vars; ++i) {
      if (m >> i & 1) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string prime_name(const VariableSet& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", x" : "x") + std::to_string(s[k]);
  return out + ")";
}

}  // namespace

std::vector<LatticePolytope> projected_newton_polytopes(const MapSpec& spec) {
  spec.validate();
  std::vector<LatticePolytope> out;
  for (const auto& I : spec.ideals) out.push_back(project_away_first(newton_polytope(I)));
  return out;
}

MultidegreeTable monomial_multidegrees(const MapSpec& spec) {
  const auto polys = projected_newton_polytopes(spec);
  MultidegreeTable table(spec.r, spec.p());
  for (const auto& [d, unused] : table.entries()) {
    std::vector<std::pair<LatticePolytope, unsigned>> slots;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] > 0) slots.emplace_back(polys[i], d[i]);
    }
    table.set(d, mixed_volume(PolytopeMultiset(std::move(slots))));
  }
  return table;
}

bool generic_finiteness_check(const MapSpec& spec) {
  const auto polys = projected_newton_polytopes(spec);
  LatticePolytope sum = polys.front();
  for (std::size_t i = 1; i < polys.size(); ++i) sum = minkowski_sum(sum, polys[i]);
  return sum.is_full_dimensional();
}

BaseLocusReport base_locus(const MapSpec& spec, bool with_mixed_mults, const GridOptions& options) {
  spec.validate();
  const std::size_t vars = spec.r + 1;
  // V(I_1 ... I_p) is the union of the V(I_i).
  std::vector<VariableSet> primes;
  for (const auto& I : spec.ideals) {
    for (auto& s : minimal_hitting_sets(I)) {
      if (s.size() < vars) primes.push_back(std::move(s));
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  BaseLocusReport report;
  for (const auto& s : primes) {
    const bool redundant = std::any_of(primes.begin(), primes.end(),
                                       [&](const VariableSet& t) { return t != s && subset(t, s); });
    if (!redundant) report.minimal_primes.push_back(s);
  }
  for (const auto& s : report.minimal_primes) {
    report.dimension = std::max(report.dimension, static_cast<int>(spec.r) - static_cast<int>(s.size()));
  }
  if (report.dimension == 0) {
    for (const auto& s : report.minimal_primes) {
      for (std::size_t j = 0; j < vars; ++j) {
        if (!std::binary_search(s.begin(), s.end(), j)) report.points.push_back(j);
      }
    }
    std::sort(report.points.begin(), report.points.end());
  }
  if (with_mixed_mults && report.dimension <= 0) report.mixed_mults = base_locus_mixed_multiplicities(spec, options);
  return report;
}

MultidegreeTable base_locus_mixed_multiplicities(const MapSpec& spec, const GridOptions& options) {
  const auto locus = base_locus(spec);
  if (locus.dimension > 0) {
    for (const auto& s : locus.minimal_primes) {
      if (static_cast<int>(spec.r) - static_cast<int>(s.size()) > 0) {
        throw HypothesisError("base locus has dimension " + std::to_string(locus.dimension) +
                              "; minimal prime " + prime_name(s) + " is not a point");
      }
    }
  }
  MultidegreeTable total(spec.r, spec.p());
  for (const std::size_t j : locus.points) {
    const GridSampler sampler = [&spec, j](const std::vector<GridPoint>& points) {
      std::map<GridPoint, Integer> got;
      detail::ProductSweeper(spec).for_each(points, [&](const GridPoint& n, const MonomialIdeal& J) {
        const auto length = local_colength(J, j);
        if (!length) {
          throw InternalError("infinite local colength at the coordinate point x" + std::to_string(j) +
                              " of a zero-dimensional base locus");
        }
        got.emplace(n, Integer(*length));
      });
      std::vector<Integer> out;
      for (const auto& n : points) out.push_back(got.at(n));
      return out;
    };
    const auto fit = stable_fit(spec.p(), spec.r, default_grid_offset(spec), default_grid_width(spec), options, sampler);
    for (const auto& [d, e] : fit.grid.top_coeffs) total.set(d, total.at(d) + e);
  }
  return total;
}

DegreeFormulaReport degree_formula_table(const MapSpec& spec, const GridOptions& options) {
  DegreeFormulaReport report;
  report.base_mults = base_locus_mixed_multiplicities(spec, options);
  report.delta_powers = MultidegreeTable(spec.r, spec.p());
  report.table = MultidegreeTable(spec.r, spec.p());
  for (const auto& [d, unused] : report.table.entries()) {
    const Integer bound = spec.delta_power(d);
    const Integer value = bound - report.base_mults.at(d);
    if (value < 0) throw InternalError("degree formula produced a negative multidegree");
    report.delta_powers.set(d, bound);
    report.table.set(d, value);
  }
  report.generically_finite = generic_finiteness_check(spec);
  return report;
}

bool upper_bound_check(const MapSpec& spec, const MultidegreeTable& table) {
  if (table.r() != spec.r || table.p() != spec.p()) throw InputError("table does not match the spec");
  for (const auto& [d, v] : table.entries()) {
    if (v > spec.delta_power(d)) return false;
  }
  return true;
}

GraphReport graph_multidegrees(const MapSpec& spec, const GridOptions& options) {
  spec.validate();
  const std::size_t p = spec.p();
  const GridSampler sampler = [&spec, p](const std::vector<GridPoint>& points) {
    std::map<GridPoint, std::vector<std::int64_t>> by_fiber;
    for (const auto& q : points) by_fiber[GridPoint(q.begin() + 1, q.end())].push_back(q.front());
    std::vector<GridPoint> fibers;
    for (const auto& [n, unused] : by_fiber) fibers.push_back(n);
    std::map<GridPoint, Integer> got;
    detail::ProductSweeper(spec).for_each(fibers, [&](const GridPoint& n, const MonomialIdeal& J) {
      std::int64_t base = 0;
      for (std::size_t i = 0; i < p; ++i) base += n[i] * spec.deltas[i];
      for (const auto n0 : by_fiber.at(n)) {
        GridPoint q{n0};
        q.insert(q.end(), n.begin(), n.end());
        got.emplace(std::move(q), Integer(graded_piece_dimension(J, static_cast<int>(base + n0))));
      }
    });
    std::vector<Integer> out;
    for (const auto& q : points) out.push_back(got.at(q));
    return out;
  };
  GraphReport report;
  report.fit = stable_fit(p + 1, spec.r, default_grid_offset(spec), default_grid_width(spec), options, sampler);
  report.table = MultidegreeTable(spec.r, p + 1);
  for (const auto& [d, e] : report.fit.grid.top_coeffs) report.table.set(d, e);
  report.slice = MultidegreeTable(spec.r, p);
  for (const auto& [d, e] : report.table.entries()) {
    if (d.front() == 0) report.slice.set(TypeVector(d.begin() + 1, d.end()), e);
  }
  report.saturated_fiber = saturated_fiber_mixed_multiplicities(spec, options).table;
  report.slice_matches = report.slice == report.saturated_fiber;
  return report;
}

}  // namespace nmv
