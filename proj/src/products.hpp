#pragma once

// Generator sets of products of powers I_1^{n_1} ... I_p^{n_p} of
// equigenerated monomial ideals, as packed integer keys. Internal.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "nmv/hilbert.hpp"
#include "nmv/map_spec.hpp"

namespace nmv::detail {

class ProductSweeper {
 public:
  explicit ProductSweeper(const MapSpec& spec);

  /// Calls fn(n, ideal) for each requested n (any order, each once). The
  /// ideal is the product of powers with its minimal generators.
  void for_each(const std::vector<GridPoint>& points,
                const std::function<void(const GridPoint&, const MonomialIdeal&)>& fn) const;

  /// Only the number of minimal generators of the product, which for
  /// equigenerated ideals is dim_k of its degree n.delta piece.
  void for_each_count(const std::vector<GridPoint>& points,
                      const std::function<void(const GridPoint&, std::size_t)>& fn) const;

  MonomialIdeal product(const GridPoint& n) const;

 private:
  using Keys = std::vector<std::uint64_t>;

  void sweep(const std::vector<GridPoint>& points,
             const std::function<void(const GridPoint&, const Keys&)>& fn) const;
  Keys step(const Keys& keys, std::size_t ideal) const;
  MonomialIdeal unpack(const Keys& keys) const;
  void check_degree(const GridPoint& n) const;

  const MapSpec& spec_;
  std::size_t vars_;
  unsigned bits_;
  std::vector<Keys> gens_;
};

}  // namespace nmv::detail
