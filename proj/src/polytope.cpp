#include "nmv/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "nmv/error.hpp"

namespace nmv {

namespace {

using Wide = __int128;

// Laplace expansion; exact for d <= 4 with entries below 2^25.
Wide determinant(std::vector<std::vector<Wide>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Wide total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<Wide>> minor(n - 1, std::vector<Wide>(n - 1));
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, k = 0; j < n; ++j) {
        if (j != col) minor[i - 1][k++] = m[i][j];
      }
    }
    const Wide term = m[0][col] * determinant(std::move(minor));
    total += (col % 2 == 0) ? term : -term;
  }
  return total;
}

Wide gcd_wide(Wide a, Wide b) {
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer to_integer(Wide value) {
  const bool negative = value < 0;
  unsigned __int128 magnitude = negative ? static_cast<unsigned __int128>(-value)
                                         : static_cast<unsigned __int128>(value);
  Integer result = static_cast<std::uint64_t>(magnitude >> 64);
  result <<= 64;
  result += static_cast<std::uint64_t>(magnitude);
  return negative ? Integer(-result) : result;
}

/// Rank of the affine hull of `points`, plus indices of a maximal affinely
/// independent subset (first index is always 0).
std::pair<std::size_t, std::vector<std::size_t>> affine_basis(const std::vector<LatticePoint>& points) {
  const std::size_t d = points.front().size();
  std::vector<std::vector<Rational>> echelon;  // rows with leading column pivots[i]
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen{0};
  for (std::size_t idx = 1; idx < points.size() && echelon.size() < d; ++idx) {
    std::vector<Rational> v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = points[idx][k] - points[0][k];
    for (std::size_t row = 0; row < echelon.size(); ++row) {
      const std::size_t p = pivots[row];
      if (v[p] == 0) continue;
      const Rational factor = v[p] / echelon[row][p];
      for (std::size_t k = 0; k < d; ++k) v[k] -= factor * echelon[row][k];
    }
    const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (lead == v.end()) continue;
    pivots.push_back(static_cast<std::size_t>(lead - v.begin()));
    echelon.push_back(std::move(v));
    chosen.push_back(idx);
  }
  return {echelon.size(), chosen};
}

class BeneathBeyond {
 public:
  BeneathBeyond(const std::vector<LatticePoint>& points, const std::vector<std::size_t>& simplex)
      : points_(points), d_(points.front().size()) {
    // interior_ = sum of simplex vertices, i.e. (d+1) * centroid.
    interior_.assign(d_, 0);
    for (std::size_t id : simplex) {
      for (std::size_t k = 0; k < d_; ++k) interior_[k] += points_[id][k];
    }
    for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
      std::vector<std::size_t> facet;
      for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (i != skip) facet.push_back(simplex[i]);
      }
      add_facet(std::move(facet));
    }
    std::vector<bool> in_simplex(points_.size(), false);
    for (std::size_t id : simplex) in_simplex[id] = true;
    for (std::size_t id = 0; id < points_.size(); ++id) {
      if (!in_simplex[id]) insert(id);
    }
  }

  std::vector<std::vector<std::size_t>> facets() const {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      if (alive_[f]) out.push_back(facets_[f]);
    }
    return out;
  }

  /// det(v1-v0, ..., v_{d-1}-v0, q-v0); negative for interior q.
  Wide orient(const std::vector<std::size_t>& facet, const LatticePoint& q) const {
    return orient_scaled(facet, q, 1);
  }

 private:
  Wide orient_scaled(const std::vector<std::size_t>& facet, const LatticePoint& q,
                     std::int64_t scale) const {
    const LatticePoint& base = points_[facet[0]];
    std::vector<std::vector<Wide>> m(d_, std::vector<Wide>(d_));
    for (std::size_t i = 1; i < d_; ++i) {
      for (std::size_t k = 0; k < d_; ++k) {
        m[i - 1][k] = static_cast<Wide>(scale) * (points_[facet[i]][k] - base[k]);
      }
    }
    for (std::size_t k = 0; k < d_; ++k) {
      m[d_ - 1][k] = static_cast<Wide>(q[k]) - static_cast<Wide>(scale) * base[k];
    }
    return determinant(std::move(m));
  }

  void add_facet(std::vector<std::size_t> facet) {
    const Wide side = orient_scaled(facet, interior_, static_cast<std::int64_t>(d_ + 1));
    if (side == 0) throw InternalError("degenerate facet in convex hull");
    if (side > 0) std::swap(facet[0], facet[1]);
    facets_.push_back(std::move(facet));
    alive_.push_back(true);
  }

  void insert(std::size_t id) {
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      if (alive_[f] && orient(facets_[f], points_[id]) > 0) visible.push_back(f);
    }
    if (visible.empty()) return;
    // Ridges of visible facets seen once form the horizon.
    std::map<std::vector<std::size_t>, std::pair<int, std::vector<std::size_t>>> ridges;
    for (std::size_t f : visible) {
      for (std::size_t skip = 0; skip < d_; ++skip) {
        std::vector<std::size_t> ridge;
        for (std::size_t i = 0; i < d_; ++i) {
          if (i != skip) ridge.push_back(facets_[f][i]);
        }
        std::vector<std::size_t> key = ridge;
        std::sort(key.begin(), key.end());
        auto& slot = ridges[key];
        ++slot.first;
        slot.second = std::move(ridge);
      }
    }
    for (std::size_t f : visible) alive_[f] = false;
    for (auto& [key, slot] : ridges) {
      if (slot.first != 1) continue;
      std::vector<std::size_t> facet = std::move(slot.second);
      facet.push_back(id);
      add_facet(std::move(facet));
    }
  }

  const std::vector<LatticePoint>& points_;
  std::size_t d_;
  LatticePoint interior_;
  std::vector<std::vector<std::size_t>> facets_;
  std::vector<bool> alive_;
};

struct FullHull {
  std::vector<std::size_t> vertices;
  Wide normalized_volume = 0;
};

/// Hull of a full-dimensional point set in R^d, d >= 2.
FullHull full_dimensional_hull(const std::vector<LatticePoint>& points,
                               const std::vector<std::size_t>& simplex) {
  const std::size_t d = points.front().size();
  BeneathBeyond hull(points, simplex);
  const auto facets = hull.facets();

  FullHull out;
  const LatticePoint& apex = points[simplex[0]];
  for (const auto& f : facets) out.normalized_volume -= hull.orient(f, apex);

  // Outward normals via orient(f, v0 + e_k); group coplanar facets.
  std::set<std::pair<std::vector<Wide>, Wide>> planes_set;
  std::set<std::size_t> candidates;
  for (const auto& f : facets) {
    const LatticePoint& base = points[f[0]];
    std::vector<Wide> normal(d);
    Wide g = 0;
    for (std::size_t k = 0; k < d; ++k) {
      LatticePoint q = base;
      q[k] += 1;
      normal[k] = hull.orient(f, q);
      g = gcd_wide(g, normal[k] < 0 ? -normal[k] : normal[k]);
    }
    Wide offset = 0;
    for (std::size_t k = 0; k < d; ++k) {
      normal[k] /= g;
      offset += normal[k] * base[k];
    }
    planes_set.emplace(std::move(normal), offset);
    candidates.insert(f.begin(), f.end());
  }
  const std::vector<std::pair<std::vector<Wide>, Wide>> planes(planes_set.begin(), planes_set.end());
  auto on_plane = [&](std::size_t id, std::size_t plane) {
    Wide value = 0;
    for (std::size_t k = 0; k < d; ++k) value += planes[plane].first[k] * points[id][k];
    return value == planes[plane].second;
  };
  std::map<std::size_t, std::vector<std::size_t>> incident;
  for (std::size_t id : candidates) {
    for (std::size_t plane = 0; plane < planes.size(); ++plane) {
      if (on_plane(id, plane)) incident[id].push_back(plane);
    }
  }
  // A candidate is extreme iff no other candidate lies on all of its planes.
  for (std::size_t id : candidates) {
    const bool shadowed = std::any_of(candidates.begin(), candidates.end(), [&](std::size_t other) {
      if (other == id) return false;
      return std::all_of(incident[id].begin(), incident[id].end(),
                         [&](std::size_t plane) { return on_plane(other, plane); });
    });
    if (!shadowed) out.vertices.push_back(id);
  }
  return out;
}

/// Extreme point indices of an arbitrary (possibly flat) point set.
std::vector<std::size_t> extreme_points(const std::vector<LatticePoint>& points,
                                        std::size_t* affine_dim) {
  const std::size_t d = points.front().size();
  const auto [rank, basis] = affine_basis(points);
  *affine_dim = rank;
  if (rank == 0) return {0};
  if (rank == d) {
    if (d == 1) {
      const auto [lo, hi] = std::minmax_element(points.begin(), points.end());
      return {static_cast<std::size_t>(lo - points.begin()),
              static_cast<std::size_t>(hi - points.begin())};
    }
    return full_dimensional_hull(points, basis).vertices;
  }
  // Flat: find `rank` coordinates on which the projection stays injective.
  std::vector<std::size_t> coords(rank);
  std::vector<bool> mask(d, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(rank), true);
  do {
    coords.clear();
    for (std::size_t k = 0; k < d; ++k) {
      if (mask[k]) coords.push_back(k);
    }
    std::vector<LatticePoint> projected;
    projected.reserve(points.size());
    for (const auto& p : points) {
      LatticePoint q;
      for (std::size_t k : coords) q.push_back(p[k]);
      projected.push_back(std::move(q));
    }
    if (affine_basis(projected).first == rank) {
      std::size_t inner = 0;
      return extreme_points(projected, &inner);
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));
  throw InternalError("no injective coordinate projection for a flat point set");
}

void validate_points(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw InputError("convex hull of an empty point set");
  const std::size_t d = points.front().size();
  if (d == 0) throw InputError("points must have at least one coordinate");
  if (d > kMaxHullDimension) {
    throw InputError("convex hull supports ambient dimension at most 4, got " + std::to_string(d));
  }
  for (const auto& p : points) {
    if (p.size() != d) throw InputError("points of different dimensions");
    for (std::int64_t c : p) {
      if (c > kMaxCoordinate || c < -kMaxCoordinate) {
        throw InputError("lattice coordinate exceeds supported magnitude");
      }
    }
  }
}

}  // namespace

LatticePolytope convex_hull(std::vector<LatticePoint> points) {
  validate_points(points);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  LatticePolytope out;
  out.dim_ = points.front().size();
  for (std::size_t id : extreme_points(points, &out.affine_dim_)) out.vertices_.push_back(points[id]);
  std::sort(out.vertices_.begin(), out.vertices_.end());
  return out;
}

LatticePolytope newton_polytope(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InputError("the zero ideal has no Newton polytope");
  std::vector<LatticePoint> points;
  for (const auto& g : ideal.generators()) points.emplace_back(g.entries().begin(), g.entries().end());
  return convex_hull(std::move(points));
}

LatticePolytope project_away_first(const LatticePolytope& polytope) {
  if (polytope.ambient_dim() < 2) throw InputError("projection needs ambient dimension >= 2");
  std::vector<LatticePoint> points;
  for (const auto& v : polytope.vertices()) points.emplace_back(v.begin() + 1, v.end());
  return convex_hull(std::move(points));
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("Minkowski sum of mismatched dimensions");
  std::vector<LatticePoint> points;
  points.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& u : a.vertices()) {
    for (const auto& v : b.vertices()) {
      LatticePoint w(u);
      for (std::size_t k = 0; k < w.size(); ++k) w[k] += v[k];
      points.push_back(std::move(w));
    }
  }
  return convex_hull(std::move(points));
}

LatticePolytope dilate(const LatticePolytope& polytope, std::int64_t factor) {
  if (factor < 0) throw InputError("negative dilation factor");
  std::vector<LatticePoint> points;
  for (LatticePoint v : polytope.vertices()) {
    for (auto& c : v) c *= factor;
    points.push_back(std::move(v));
  }
  return convex_hull(std::move(points));
}

LatticePolytope translate(const LatticePolytope& polytope, const LatticePoint& shift) {
  if (shift.size() != polytope.ambient_dim()) throw InputError("translation of mismatched dimension");
  std::vector<LatticePoint> points;
  for (LatticePoint v : polytope.vertices()) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += shift[k];
    points.push_back(std::move(v));
  }
  return convex_hull(std::move(points));
}

Integer normalized_volume(const LatticePolytope& polytope) {
  const std::size_t d = polytope.ambient_dim();
  if (!polytope.is_full_dimensional()) return 0;
  const auto& vertices = polytope.vertices();
  if (d == 1) return Integer(vertices.back()[0] - vertices.front()[0]);
  const auto basis = affine_basis(vertices).second;
  return to_integer(full_dimensional_hull(vertices, basis).normalized_volume);
}

Rational volume(const LatticePolytope& polytope) {
  return Rational(normalized_volume(polytope), factorial(static_cast<std::int64_t>(polytope.ambient_dim())));
}

// ---------------------------------------------------------------------------
// Mixed volume

PolytopeMultiset::PolytopeMultiset(std::vector<std::pair<LatticePolytope, unsigned>> entries)
    : entries_(std::move(entries)) {
  for (const auto& [polytope, mult] : entries_) {
    if (mult == 0) throw InputError("polytope multiplicity must be positive");
    if (polytope.ambient_dim() != entries_.front().first.ambient_dim()) {
      throw InputError("polytopes of a multiset must share their ambient dimension");
    }
  }
}

std::size_t PolytopeMultiset::ambient_dim() const {
  return entries_.empty() ? 0 : entries_.front().first.ambient_dim();
}

unsigned PolytopeMultiset::total_multiplicity() const {
  unsigned total = 0;
  for (const auto& entry : entries_) total += entry.second;
  return total;
}

Integer mixed_volume(const PolytopeMultiset& multiset) {
  const std::size_t r = multiset.ambient_dim();
  if (multiset.entries().empty() || multiset.total_multiplicity() != r) {
    throw InputError("mixed volume needs multiplicities summing to the ambient dimension");
  }
  const auto& entries = multiset.entries();
  const std::size_t k = entries.size();
  // Subsets of the r slots collapse to counts c_i <= m_i per distinct entry;
  // each count vector stands for prod C(m_i, c_i) subsets of size |c|.
  std::vector<unsigned> counts(k, 0);
  Integer total = 0;  // in units of 1/r!
  while (true) {
    std::size_t axis = 0;
    for (; axis < k; ++axis) {
      if (++counts[axis] <= entries[axis].second) break;
      counts[axis] = 0;
    }
    if (axis == k) break;

    unsigned size = 0;
    Integer weight = 1;
    std::optional<LatticePolytope> sum;
    for (std::size_t i = 0; i < k; ++i) {
      if (counts[i] == 0) continue;
      size += counts[i];
      weight *= binomial(entries[i].second, counts[i]);
      LatticePolytope part = dilate(entries[i].first, counts[i]);
      sum = sum ? minkowski_sum(*sum, part) : std::move(part);
    }
    const Integer term = weight * normalized_volume(*sum);
    if ((r - size) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  const Integer r_factorial = factorial(static_cast<std::int64_t>(r));
  if (total % r_factorial != 0 || total < 0) {
    throw InternalError("mixed volume is not a nonnegative integer: " +
                        to_string(Rational(total, r_factorial)));
  }
  return total / r_factorial;
}

}  // namespace nmv
