#pragma once

// Sampling a multigraded Hilbert function on a box of integer points and
// fitting its Hilbert polynomial exactly.
//
// Polynomials are written in the basis prod_i C(n_i + d_i, d_i), |d| <= r, so
// the coefficient of a top-degree basis element (|d| = r) is the normalized
// mixed multiplicity e(d) itself.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nmv/map_spec.hpp"
#include "nmv/numeric.hpp"

namespace nmv {

using GridPoint = std::vector<std::int64_t>;

struct HilbertGrid {
  std::size_t p = 0;
  unsigned degree = 0;
  GridPoint offsets;
  unsigned width = 0;
  /// One value for every n in {N0+1, ..., N0+W}^p.
  std::map<GridPoint, Integer> samples;
  /// Coefficients in the binomial basis, keyed by d with |d| <= degree.
  std::optional<std::map<TypeVector, Rational>> fitted;
  /// e(d) for |d| = degree.
  std::map<TypeVector, Integer> top_coeffs;

  std::vector<GridPoint> points() const;
  Rational evaluate(const GridPoint& n) const;
};

/// Interpolates on the nodes N0+1+a, |a| <= degree, checks the result on
/// every other sample, and extracts the top coefficients. Throws
/// StabilityError when a held-out sample is missed or a top coefficient is
/// not a nonnegative integer, and InputError when width < degree + 2.
void fit_hilbert(HilbertGrid& grid);

/// Produces values at the requested points, in the same order.
using GridSampler = std::function<std::vector<Integer>(const std::vector<GridPoint>& points)>;

struct GridOptions {
  std::optional<std::int64_t> offset;
  std::optional<unsigned> width;
};

struct StableFit {
  HilbertGrid grid;
  HilbertGrid shifted;
  /// True when the default offsets had to be doubled.
  bool escalated = false;
};

/// Fits on the grid with offsets N0 and again on the grid shifted by +1 in
/// every coordinate; the two top parts must agree. On disagreement the
/// offsets are doubled once before giving up with StabilityError.
StableFit stable_fit(std::size_t p, unsigned degree, std::int64_t default_offset, unsigned default_width,
                     const GridOptions& options, const GridSampler& sampler);

std::string describe(const HilbertGrid& grid);

}  // namespace nmv
