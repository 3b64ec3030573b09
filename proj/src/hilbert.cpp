#include "nmv/hilbert.hpp"

#include <set>
#include <sstream>

#include "linalg.hpp"
#include "nmv/error.hpp"

namespace nmv {
namespace {

std::vector<TypeVector> basis_indices(std::size_t p, unsigned degree) {
  std::vector<TypeVector> out;
  for (unsigned k = 0; k <= degree; ++k) {
    for (auto& d : compositions(k, p)) out.push_back(std::move(d));
  }
  return out;
}

Rational basis_value(const TypeVector& d, const GridPoint& n) {
  Integer v = 1;
  for (std::size_t i = 0; i < d.size(); ++i) v *= binomial(n[i] + d[i], d[i]);
  return Rational(v);
}

std::string format_point(const std::vector<std::int64_t>& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

HilbertGrid make_grid(std::size_t p, unsigned degree, std::int64_t offset, unsigned width) {
  HilbertGrid grid;
  grid.p = p;
  grid.degree = degree;
  grid.offsets.assign(p, offset);
  grid.width = width;
  return grid;
}

}  // namespace

std::vector<GridPoint> HilbertGrid::points() const {
  std::vector<GridPoint> out;
  GridPoint n(p);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == p) {
      out.push_back(n);
      return;
    }
    for (unsigned k = 1; k <= width; ++k) {
      n[i] = offsets[i] + k;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Rational HilbertGrid::evaluate(const GridPoint& n) const {
  if (!fitted) throw InternalError("grid has not been fitted");
  Rational v = 0;
  for (const auto& [d, c] : *fitted) v += c * basis_value(d, n);
  return v;
}

void fit_hilbert(HilbertGrid& grid) {
  if (grid.width < grid.degree + 2) {
    throw InputError("grid width " + std::to_string(grid.width) + " is below degree + 2 = " +
                     std::to_string(grid.degree + 2));
  }
  const auto basis = basis_indices(grid.p, grid.degree);
  detail::RationalMatrix a;
  std::vector<Rational> b;
  std::set<GridPoint> nodes;
  for (const auto& shift : basis) {
    GridPoint n(grid.p);
    for (std::size_t i = 0; i < grid.p; ++i) n[i] = grid.offsets[i] + 1 + shift[i];
    const auto it = grid.samples.find(n);
    if (it == grid.samples.end()) throw InternalError("missing sample at " + format_point(n));
    std::vector<Rational> row;
    row.reserve(basis.size());
    for (const auto& d : basis) row.push_back(basis_value(d, n));
    a.push_back(std::move(row));
    b.emplace_back(it->second);
    nodes.insert(n);
  }
  const auto solution = detail::solve(a, b);
  if (!solution) throw InternalError("interpolation nodes are not unisolvent");
  std::map<TypeVector, Rational> coeffs;
  for (std::size_t k = 0; k < basis.size(); ++k) coeffs.emplace(basis[k], (*solution)[k]);
  grid.fitted = std::move(coeffs);
  grid.top_coeffs.clear();

  for (const auto& [n, value] : grid.samples) {
    if (nodes.count(n)) continue;
    if (grid.evaluate(n) != Rational(value)) {
      throw StabilityError("Hilbert function is not polynomial on the grid: residual at " + format_point(n));
    }
  }
  for (const auto& [d, c] : *grid.fitted) {
    unsigned total = 0;
    for (auto v : d) total += v;
    if (total != grid.degree) continue;
    if (!is_integer(c) || c < 0) {
      throw StabilityError("top coefficient e" + format_point({d.begin(), d.end()}) + " = " + to_string(c) +
                           " is not a nonnegative integer");
    }
    grid.top_coeffs.emplace(d, numerator(c));
  }
}

StableFit stable_fit(std::size_t p, unsigned degree, std::int64_t default_offset, unsigned default_width,
                     const GridOptions& options, const GridSampler& sampler) {
  const unsigned width = options.width.value_or(default_width);
  std::int64_t offset = options.offset.value_or(default_offset);
  if (offset < 0) throw InputError("grid offset must be nonnegative");
  if (width < degree + 2) {
    throw InputError("grid width " + std::to_string(width) + " is below r + 2 = " + std::to_string(degree + 2));
  }
  std::string failures;
  for (int attempt = 0; attempt < 2; ++attempt) {
    StableFit fit{make_grid(p, degree, offset, width), make_grid(p, degree, offset + 1, width), attempt > 0};
    std::set<GridPoint> wanted;
    for (const auto& n : fit.grid.points()) wanted.insert(n);
    for (const auto& n : fit.shifted.points()) wanted.insert(n);
    const std::vector<GridPoint> request(wanted.begin(), wanted.end());
    const auto values = sampler(request);
    if (values.size() != request.size()) throw InternalError("sampler returned the wrong number of values");
    for (std::size_t k = 0; k < request.size(); ++k) {
      const auto& n = request[k];
      bool in_first = true, in_second = true;
      for (std::size_t i = 0; i < p; ++i) {
        in_first = in_first && n[i] <= offset + width;
        in_second = in_second && n[i] >= offset + 2;
      }
      if (in_first) fit.grid.samples.emplace(n, values[k]);
      if (in_second) fit.shifted.samples.emplace(n, values[k]);
    }
    try {
      fit_hilbert(fit.grid);
      fit_hilbert(fit.shifted);
      if (fit.grid.top_coeffs == fit.shifted.top_coeffs) return fit;
      failures += "offset " + std::to_string(offset) + ": shifted grids disagree\n  " + describe(fit.grid) + "\n  " +
                  describe(fit.shifted) + "\n";
    } catch (const StabilityError& e) {
      failures += "offset " + std::to_string(offset) + ": " + e.what() + "\n";
    }
    offset = std::max<std::int64_t>(2 * offset, 1);
  }
  throw StabilityError("Hilbert polynomial fit did not stabilize\n" + failures);
}

std::string describe(const HilbertGrid& grid) {
  std::ostringstream out;
  out << "offsets " << format_point(grid.offsets) << " width " << grid.width << ":";
  for (const auto& [d, e] : grid.top_coeffs) out << " e" << format_point({d.begin(), d.end()}) << "=" << e;
  return out.str();
}

}  // namespace nmv
