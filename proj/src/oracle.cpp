#include "nmv/oracle.hpp"

#include <algorithm>
#include <map>

#include "nmv/error.hpp"
#include "products.hpp"

namespace nmv {
namespace {

int piece_degree(const MapSpec& spec, const GridPoint& n) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < n.size(); ++i) d += n[i] * spec.deltas[i];
  return static_cast<int>(d);
}

MultidegreeTable to_table(const MapSpec& spec, const HilbertGrid& grid) {
  MultidegreeTable table(spec.r, spec.p());
  for (const auto& [d, e] : grid.top_coeffs) table.set(d, e);
  return table;
}

std::vector<Integer> in_request_order(const std::vector<GridPoint>& points, const std::map<GridPoint, Integer>& got) {
  std::vector<Integer> out;
  out.reserve(points.size());
  for (const auto& n : points) out.push_back(got.at(n));
  return out;
}

GridSampler saturated_sampler(const MapSpec& spec) {
  return [&spec](const std::vector<GridPoint>& points) {
    std::map<GridPoint, Integer> got;
    detail::ProductSweeper(spec).for_each(points, [&](const GridPoint& n, const MonomialIdeal& J) {
      got.emplace(n, Integer(saturated_piece_dimension(J, piece_degree(spec, n))));
    });
    return in_request_order(points, got);
  };
}

GridSampler fiber_sampler(const MapSpec& spec) {
  return [&spec](const std::vector<GridPoint>& points) {
    std::map<GridPoint, Integer> got;
    detail::ProductSweeper(spec).for_each_count(
        points, [&](const GridPoint& n, std::size_t count) { got.emplace(n, Integer(count)); });
    return in_request_order(points, got);
  };
}

void check_point(const MapSpec& spec, const GridPoint& n) {
  spec.validate();
  if (n.size() != spec.p()) throw InputError("grid point has the wrong length");
}

}  // namespace

Integer saturated_fiber_dimension(const MapSpec& spec, const GridPoint& n) {
  check_point(spec, n);
  return saturated_sampler(spec)({n}).front();
}

Integer fiber_dimension(const MapSpec& spec, const GridPoint& n) {
  check_point(spec, n);
  return fiber_sampler(spec)({n}).front();
}

std::int64_t default_grid_offset(const MapSpec& spec) {
  return spec.r + *std::max_element(spec.deltas.begin(), spec.deltas.end()) + 2;
}

unsigned default_grid_width(const MapSpec& spec) { return spec.r + 2; }

OracleResult saturated_fiber_mixed_multiplicities(const MapSpec& spec, const GridOptions& options) {
  spec.validate();
  auto fit = stable_fit(spec.p(), spec.r, default_grid_offset(spec), default_grid_width(spec), options,
                        saturated_sampler(spec));
  auto table = to_table(spec, fit.grid);
  return {std::move(table), std::move(fit)};
}

OracleResult special_fiber_mixed_multiplicities(const MapSpec& spec, const GridOptions& options) {
  spec.validate();
  auto fit = stable_fit(spec.p(), spec.r, default_grid_offset(spec), default_grid_width(spec), options,
                        fiber_sampler(spec));
  auto table = to_table(spec, fit.grid);
  return {std::move(table), std::move(fit)};
}

BirationalityReport birationality_defect(const MapSpec& spec, const GridOptions& options) {
  BirationalityReport report;
  report.saturated = saturated_fiber_mixed_multiplicities(spec, options).table;
  report.special = special_fiber_mixed_multiplicities(spec, options).table;
  report.defect = MultidegreeTable(spec.r, spec.p());
  for (const auto& [d, s] : report.saturated.entries()) {
    const Integer diff = s - report.special.at(d);
    if (diff < 0) {
      throw InternalError("special fiber multiplicity exceeds the saturated one at a type vector");
    }
    report.defect.set(d, diff);
  }
  return report;
}

}  // namespace nmv
