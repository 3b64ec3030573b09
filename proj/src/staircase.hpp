#pragma once

// Dense staircase tables for monomial ideals. Internal to the library.

#include <climits>
#include <cstddef>
#include <span>
#include <vector>

#include "dense_box.hpp"
#include "nmv/monomial.hpp"

namespace nmv::detail {

inline constexpr int kNoGenerator = INT_MAX;

/// Calls fn(u) for every u in N^parts with |u| == total; `u` is reused.
template <class Fn>
void for_each_composition(int total, std::size_t parts, Fn&& fn) {
  std::vector<int> u(parts, 0);
  if (parts == 0) {
    if (total == 0) fn(std::span<const int>(u));
    return;
  }
  // Odometer over the last parts-1 coordinates; u[0] takes the remainder.
  int rest = 0;
  while (true) {
    u[0] = total - rest;
    if (u[0] >= 0) fn(std::span<const int>(u));
    std::size_t axis = 1;
    for (; axis < parts; ++axis) {
      if (rest < total) {
        ++u[axis];
        ++rest;
        break;
      }
      rest -= u[axis];
      u[axis] = 0;
    }
    if (axis == parts) return;
  }
}

/// For a generator set in `vars` variables and a pivot variable, records at
/// every point v of [0, bound]^(vars-1) (the non-pivot coordinates) the least
/// pivot exponent among generators whose non-pivot part divides v.
///
/// Membership of u in the ideal is then  min_pivot(u) <= u[pivot], and
/// membership in (I : x_pivot^inf) is  min_pivot(u) != kNoGenerator.
class PivotStaircase {
 public:
  PivotStaircase(std::span<const ExponentVector> gens, std::size_t vars, std::size_t pivot,
                 int bound)
      : pivot_(pivot), box_(std::vector<int>(vars - 1, bound + 1)) {
    table_.assign(box_.cells(), kNoGenerator);
    std::vector<int> others(vars - 1);
    for (const auto& g : gens) {
      project(g.entries(), others);
      if (!box_.inside(others)) continue;
      int& cell = table_[box_.flat(others)];
      cell = std::min(cell, g[pivot_]);
    }
    box_.sweep(table_, [](int& dst, int src) { dst = std::min(dst, src); });
    // Full-coordinate strides with a zero stride on the pivot.
    full_strides_.assign(vars, 0);
    for (std::size_t i = 0, k = 0; i < vars; ++i) {
      if (i == pivot_) continue;
      full_strides_[i] = box_.strides()[k++];
    }
  }

  static bool fits(std::size_t vars, int bound) {
    std::vector<int> extents(vars - 1, bound + 1);
    return DenseBox::cell_count(extents) <= kMaxDenseCells;
  }

  /// `u` has all `vars` coordinates, each in [0, bound].
  int min_pivot(std::span<const int> u) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < u.size(); ++i) index += static_cast<std::size_t>(u[i]) * full_strides_[i];
    return table_[index];
  }

  bool contains(std::span<const int> u) const { return min_pivot(u) <= u[pivot_]; }
  bool in_colon(std::span<const int> u) const { return min_pivot(u) != kNoGenerator; }

 private:
  void project(std::span<const int> full, std::vector<int>& out) const {
    for (std::size_t i = 0, k = 0; i < full.size(); ++i) {
      if (i != pivot_) out[k++] = full[i];
    }
  }

  std::size_t pivot_;
  DenseBox box_;
  std::vector<int> table_;
  std::vector<std::size_t> full_strides_;
};

}  // namespace nmv::detail
