#pragma once

// Brute-force reference computations used only by tests. Nothing here calls
// into the library's counting or hull code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace nmv::testing {

using Exps = std::vector<int>;
using Point = std::vector<std::int64_t>;
using Q = boost::multiprecision::mpq_rational;

inline bool divides(const Exps& g, const Exps& u) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > u[i]) return false;
  }
  return true;
}

/// All exponent vectors of `vars` variables with total degree `degree`.
inline std::vector<Exps> monomials_of_degree(std::size_t vars, int degree) {
  std::vector<Exps> out;
  Exps u(vars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == vars) {
      u[i] = left;
      out.push_back(u);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      u[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (vars > 0) rec(rec, 0, degree);
  return out;
}

inline std::uint64_t brute_piece_dimension(const std::vector<Exps>& gens, std::size_t vars, int degree) {
  std::uint64_t count = 0;
  for (const auto& u : monomials_of_degree(vars, degree)) {
    if (std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, u); })) ++count;
  }
  return count;
}

/// Degree-`degree` monomials u with u * x_j^k in the ideal for some k, for
/// every j: the degree piece of the saturation, straight from its definition.
inline std::uint64_t brute_saturated_piece_dimension(const std::vector<Exps>& gens, std::size_t vars,
                                                     int degree) {
  std::uint64_t count = 0;
  for (const auto& u : monomials_of_degree(vars, degree)) {
    bool all = true;
    for (std::size_t j = 0; j < vars && all; ++j) {
      bool some = false;
      for (const auto& g : gens) {
        bool ok = true;
        for (std::size_t i = 0; i < vars; ++i) {
          if (i != j && g[i] > u[i]) ok = false;
        }
        some = some || ok;
      }
      all = some;
    }
    if (all) ++count;
  }
  return count;
}

/// Standard monomials of the ideal after setting x_j = 1, enumerated in the
/// box [0, limit)^(vars-1). Valid when the true answer fits in the box.
inline std::uint64_t brute_local_colength(const std::vector<Exps>& gens, std::size_t vars,
                                          std::size_t j, int limit) {
  std::vector<Exps> local;
  for (const auto& g : gens) {
    Exps h;
    for (std::size_t i = 0; i < vars; ++i) {
      if (i != j) h.push_back(g[i]);
    }
    local.push_back(h);
  }
  std::uint64_t count = 0;
  Exps u(vars - 1, 0);
  while (true) {
    if (!std::any_of(local.begin(), local.end(), [&](const Exps& g) { return divides(g, u); })) ++count;
    std::size_t axis = 0;
    for (; axis < u.size(); ++axis) {
      if (++u[axis] < limit) break;
      u[axis] = 0;
    }
    if (axis == u.size()) break;
  }
  return count;
}

inline std::int64_t det(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return total;
}

struct HalfSpace {
  std::vector<std::int64_t> normal;  // normal . x <= offset
  std::int64_t offset;
};

/// Facet inequalities of a full-dimensional point set in R^2 or R^3 by
/// trying every hyperplane through d of the points.
inline std::vector<HalfSpace> brute_facets(const std::vector<Point>& pts) {
  const std::size_t d = pts.front().size();
  std::vector<HalfSpace> out;
  std::vector<std::size_t> idx(d);
  auto consider = [&]() {
    std::vector<std::int64_t> normal(d);
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<std::vector<std::int64_t>> m;
      for (std::size_t i = 1; i < d; ++i) {
        std::vector<std::int64_t> row(d);
        for (std::size_t c = 0; c < d; ++c) row[c] = pts[idx[i]][c] - pts[idx[0]][c];
        m.push_back(row);
      }
      std::vector<std::int64_t> ek(d, 0);
      ek[k] = 1;
      m.push_back(ek);
      normal[k] = det(m);
    }
    if (std::all_of(normal.begin(), normal.end(), [](std::int64_t v) { return v == 0; })) return;
    auto value = [&](const Point& p) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < d; ++k) s += normal[k] * p[k];
      return s;
    };
    const std::int64_t c = value(pts[idx[0]]);
    bool le = true, ge = true;
    for (const auto& p : pts) {
      le = le && value(p) <= c;
      ge = ge && value(p) >= c;
    }
    if (ge && !le) {
      for (auto& v : normal) v = -v;
      out.push_back({normal, -c});
    } else if (le) {
      out.push_back({normal, c});
    }
  };
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == d) {
      consider();
      return;
    }
    for (std::size_t i = start; i < pts.size(); ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Points of the set that are not convex combinations of the others, via
/// the brute-force facet list: extreme iff no other point shares all of
/// its supporting facets.
inline std::set<Point> brute_vertices(const std::vector<Point>& input) {
  std::vector<Point> pts(input);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const auto facets = brute_facets(pts);
  auto on = [&](const Point& p, const HalfSpace& h) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < p.size(); ++k) s += h.normal[k] * p[k];
    return s == h.offset;
  };
  std::set<Point> out;
  for (const auto& p : pts) {
    bool shadowed = false;
    for (const auto& q : pts) {
      if (q == p) continue;
      bool all = true;
      for (const auto& h : facets) {
        if (on(p, h) && !on(q, h)) all = false;
      }
      shadowed = shadowed || all;
    }
    if (!shadowed) out.insert(p);
  }
  return out;
}

/// Volume of a full-dimensional lattice polytope in R^2 or R^3 as the
/// leading Ehrhart coefficient, from lattice-point counts of its dilates.
inline Q ehrhart_volume(const std::vector<Point>& pts) {
  const std::size_t d = pts.front().size();
  const auto facets = brute_facets(pts);
  std::vector<std::int64_t> lo(d, INT64_MAX), hi(d, INT64_MIN);
  for (const auto& p : pts) {
    for (std::size_t k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  }
  auto count = [&](std::int64_t t) {
    std::int64_t n = 0;
    Point x(d);
    for (std::size_t k = 0; k < d; ++k) x[k] = t * lo[k];
    while (true) {
      bool inside = true;
      for (const auto& h : facets) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < d; ++k) s += h.normal[k] * x[k];
        if (s > t * h.offset) {
          inside = false;
          break;
        }
      }
      if (inside) ++n;
      std::size_t axis = 0;
      for (; axis < d; ++axis) {
        if (++x[axis] <= t * hi[axis]) break;
        x[axis] = t * lo[axis];
      }
      if (axis == d) break;
    }
    return n;
  };
  // L(t) = sum_{i<=d} a_i t^i with a_0 = 1; solve for a_d from t = 1..d.
  std::vector<std::vector<Q>> m(d, std::vector<Q>(d + 1));
  for (std::size_t t = 1; t <= d; ++t) {
    Q tp = 1;
    for (std::size_t i = 1; i <= d; ++i) {
      tp *= static_cast<long>(t);
      m[t - 1][i - 1] = tp;
    }
    m[t - 1][d] = Q(count(static_cast<std::int64_t>(t)) - 1);
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Q f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return m[d - 1][d] / m[d - 1][d - 1];
}

inline std::vector<Point> random_points(std::mt19937& rng, std::size_t dim, std::size_t count, int max_coord) {
  std::uniform_int_distribution<int> coord(0, max_coord);
  std::vector<Point> pts(count, Point(dim));
  for (auto& p : pts) {
    for (auto& c : p) c = coord(rng);
  }
  return pts;
}

inline std::vector<Exps> random_generators(std::mt19937& rng, std::size_t vars, std::size_t count,
                                           int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<Exps> gens(count, Exps(vars));
  for (auto& g : gens) {
    for (auto& x : g) x = e(rng);
  }
  return gens;
}

}  // namespace nmv::testing
