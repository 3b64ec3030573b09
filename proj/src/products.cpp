#include "products.hpp"

#include <algorithm>
#include <map>

#include "nmv/error.hpp"

namespace nmv::detail {

ProductSweeper::ProductSweeper(const MapSpec& spec)
    : spec_(spec), vars_(spec.r + 1), bits_(std::min<unsigned>(16, 64 / static_cast<unsigned>(vars_))) {
  for (const auto& I : spec.ideals) {
    Keys keys;
    for (const auto& g : I.generators()) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < vars_; ++i) key |= static_cast<std::uint64_t>(g[i]) << (bits_ * i);
      keys.push_back(key);
    }
    gens_.push_back(std::move(keys));
  }
}

void ProductSweeper::check_degree(const GridPoint& n) const {
  std::int64_t degree = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < 0) throw InputError("negative power in a product of ideals");
    degree += n[i] * spec_.deltas[i];
  }
  if (degree >= (std::int64_t{1} << bits_)) {
    throw InputError("degree " + std::to_string(degree) + " is too large for " + std::to_string(vars_) + " variables");
  }
}

ProductSweeper::Keys ProductSweeper::step(const Keys& keys, std::size_t ideal) const {
  Keys out;
  out.reserve(keys.size() * gens_[ideal].size());
  for (auto k : keys) {
    for (auto g : gens_[ideal]) out.push_back(k + g);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MonomialIdeal ProductSweeper::unpack(const Keys& keys) const {
  const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
  std::vector<ExponentVector> gens;
  gens.reserve(keys.size());
  std::vector<int> e(vars_);
  for (auto k : keys) {
    for (std::size_t i = 0; i < vars_; ++i) e[i] = static_cast<int>((k >> (bits_ * i)) & mask);
    gens.emplace_back(e);
  }
  return minimalize(vars_, std::move(gens));
}

void ProductSweeper::sweep(const std::vector<GridPoint>& points,
                           const std::function<void(const GridPoint&, const Keys&)>& fn) const {
  const std::size_t p = spec_.p();
  // Points sharing all but the last coordinate are reached by repeatedly
  // multiplying one common prefix product by I_p.
  std::map<GridPoint, std::vector<std::int64_t>> rows;
  for (const auto& n : points) {
    if (n.size() != p) throw InputError("grid point has the wrong length");
    check_degree(n);
    rows[GridPoint(n.begin(), n.end() - 1)].push_back(n.back());
  }
  for (auto& [prefix, lasts] : rows) {
    std::sort(lasts.begin(), lasts.end());
    lasts.erase(std::unique(lasts.begin(), lasts.end()), lasts.end());
    Keys keys{0};
    for (std::size_t i = 0; i + 1 < p; ++i) {
      for (std::int64_t k = 0; k < prefix[i]; ++k) keys = step(keys, i);
    }
    GridPoint n = prefix;
    n.push_back(0);
    std::int64_t at = 0;
    for (auto target : lasts) {
      for (; at < target; ++at) keys = step(keys, p - 1);
      n.back() = target;
      fn(n, keys);
    }
  }
}

void ProductSweeper::for_each(const std::vector<GridPoint>& points,
                              const std::function<void(const GridPoint&, const MonomialIdeal&)>& fn) const {
  sweep(points, [&](const GridPoint& n, const Keys& keys) { fn(n, unpack(keys)); });
}

void ProductSweeper::for_each_count(const std::vector<GridPoint>& points,
                                    const std::function<void(const GridPoint&, std::size_t)>& fn) const {
  sweep(points, [&](const GridPoint& n, const Keys& keys) { fn(n, keys.size()); });
}

MonomialIdeal ProductSweeper::product(const GridPoint& n) const {
  MonomialIdeal out = MonomialIdeal::unit(vars_);
  for_each({n}, [&](const GridPoint&, const MonomialIdeal& I) { out = I; });
  return out;
}

}  // namespace nmv::detail
