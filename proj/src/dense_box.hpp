#pragma once

// Flat storage over an integer box [0, e_0) x ... x [0, e_{k-1}) with
// dominance-order sweeps. Internal to the library.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nmv::detail {

inline constexpr std::size_t kMaxDenseCells = std::size_t{1} << 25;

class DenseBox {
 public:
  explicit DenseBox(std::vector<int> extents) : extents_(std::move(extents)) {
    strides_.resize(extents_.size());
    cells_ = 1;
    for (std::size_t i = 0; i < extents_.size(); ++i) {
      strides_[i] = cells_;
      cells_ *= static_cast<std::size_t>(extents_[i]);
    }
  }

  static std::size_t cell_count(std::span<const int> extents) {
    std::size_t cells = 1;
    for (int e : extents) {
      if (e <= 0) return 0;
      if (cells > kMaxDenseCells / static_cast<std::size_t>(e)) return kMaxDenseCells + 1;
      cells *= static_cast<std::size_t>(e);
    }
    return cells;
  }

  std::size_t cells() const { return cells_; }
  std::size_t rank() const { return extents_.size(); }
  const std::vector<int>& extents() const { return extents_; }
  const std::vector<std::size_t>& strides() const { return strides_; }

  bool inside(std::span<const int> point) const {
    for (std::size_t i = 0; i < extents_.size(); ++i) {
      if (point[i] < 0 || point[i] >= extents_[i]) return false;
    }
    return true;
  }

  std::size_t flat(std::span<const int> point) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < extents_.size(); ++i) {
      index += static_cast<std::size_t>(point[i]) * strides_[i];
    }
    return index;
  }

  /// Replaces every cell by the combination of all cells it dominates, in
  /// one pass in increasing flat order. `combine(dst, src)` must be
  /// idempotent and associative (min, max, or).
  template <class T, class Combine>
  void sweep(std::vector<T>& values, Combine combine) const {
    std::vector<int> coord(extents_.size(), 0);
    for (std::size_t index = 0; index < cells_; ++index) {
      for (std::size_t axis = 0; axis < coord.size(); ++axis) {
        if (coord[axis] > 0) combine(values[index], values[index - strides_[axis]]);
      }
      for (std::size_t axis = 0; axis < coord.size(); ++axis) {
        if (++coord[axis] < extents_[axis]) break;
        coord[axis] = 0;
      }
    }
  }

 private:
  std::vector<int> extents_;
  std::vector<std::size_t> strides_;
  std::size_t cells_ = 1;
};

}  // namespace nmv::detail
