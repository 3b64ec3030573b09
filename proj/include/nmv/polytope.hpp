#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "nmv/monomial.hpp"
#include "nmv/numeric.hpp"

namespace nmv {

using LatticePoint = std::vector<std::int64_t>;

/// Largest coordinate magnitude accepted by the hull code. Orientation
/// determinants are evaluated in 128-bit integers and stay exact below it.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 20;
inline constexpr std::size_t kMaxHullDimension = 4;

/// A lattice polytope stored by its extreme points, sorted.
class LatticePolytope {
 public:
  std::size_t ambient_dim() const { return dim_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  /// Dimension of the affine hull of the vertices.
  std::size_t affine_dim() const { return affine_dim_; }
  bool is_full_dimensional() const { return affine_dim_ == dim_; }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend LatticePolytope convex_hull(std::vector<LatticePoint> points);

  std::size_t dim_ = 0;
  std::size_t affine_dim_ = 0;
  std::vector<LatticePoint> vertices_;
};

/// Vertex-minimal hull of a nonempty point set in dimension <= 4. The hull
/// may be lower-dimensional. Throws InputError on empty or ragged input.
LatticePolytope convex_hull(std::vector<LatticePoint> points);

/// Hull of the exponent vectors of the minimal generators of a nonzero ideal.
LatticePolytope newton_polytope(const MonomialIdeal& ideal);

/// Drops the first coordinate of every vertex and re-hulls.
LatticePolytope project_away_first(const LatticePolytope& polytope);

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);
/// factor * P for a nonnegative integer factor; 0 * P is the origin.
LatticePolytope dilate(const LatticePolytope& polytope, std::int64_t factor);
LatticePolytope translate(const LatticePolytope& polytope, const LatticePoint& shift);

/// d! * Vol_d(P) for ambient dimension d: always an integer for lattice
/// polytopes, zero when P is not full-dimensional.
Integer normalized_volume(const LatticePolytope& polytope);
/// Euclidean volume in the ambient space.
Rational volume(const LatticePolytope& polytope);

/// A multiset of polytopes in a common R^r with multiplicities summing to r.
class PolytopeMultiset {
 public:
  PolytopeMultiset() = default;
  PolytopeMultiset(std::vector<std::pair<LatticePolytope, unsigned>> entries);

  const std::vector<std::pair<LatticePolytope, unsigned>>& entries() const { return entries_; }
  std::size_t ambient_dim() const;
  unsigned total_multiplicity() const;

 private:
  std::vector<std::pair<LatticePolytope, unsigned>> entries_;
};

/// MV_r normalized so that MV_r(K, ..., K) = r! Vol_r(K), computed by
/// polarization over sub-multisets. Throws InputError when the
/// multiplicities do not sum to the ambient dimension and InternalError
/// when the result is not a nonnegative integer.
Integer mixed_volume(const PolytopeMultiset& multiset);

}  // namespace nmv
