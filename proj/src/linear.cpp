#include "nmv/linear.hpp"

#include <algorithm>
#include <string>

#include "linalg.hpp"
#include "nmv/error.hpp"

namespace nmv {

void CameraConfig::validate() const {
  if (r < 1) throw InputError("the source must be P^r with r >= 1");
  if (cameras.empty()) throw InputError("at least one camera is required");
  for (std::size_t i = 0; i < cameras.size(); ++i) {
    const auto& A = cameras[i];
    if (A.empty()) throw InputError("camera " + std::to_string(i + 1) + " has no rows");
    for (const auto& row : A) {
      if (row.size() != r + 1) {
        throw InputError("camera " + std::to_string(i + 1) + " must have r + 1 = " + std::to_string(r + 1) + " columns");
      }
    }
  }
}

ProjectivePoint normalize(ProjectivePoint point) {
  const auto lead = std::find_if(point.begin(), point.end(), [](const Rational& v) { return v != 0; });
  if (lead == point.end()) throw InputError("the zero vector is not a projective point");
  const Rational scale = *lead;
  for (auto& v : point) v /= scale;
  return point;
}

std::optional<ProjectivePoint> camera_kernel(const RationalMatrix& camera, unsigned r) {
  const auto kernel = detail::kernel_basis(camera, r + 1);
  const std::size_t rank = r + 1 - kernel.size();
  if (rank < r) {
    throw HypothesisError("camera of rank " + std::to_string(rank) + " < r = " + std::to_string(r) +
                          " gives a positive-dimensional base locus");
  }
  if (kernel.empty()) return std::nullopt;
  return normalize(kernel.front());
}

std::vector<ProjectivePoint> camera_base_points(const CameraConfig& config) {
  config.validate();
  std::vector<ProjectivePoint> points;
  for (const auto& A : config.cameras) {
    if (auto q = camera_kernel(A, config.r)) points.push_back(std::move(*q));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

MultidegreeTable multidegree_support(const CameraConfig& config) {
  config.validate();
  std::vector<std::optional<ProjectivePoint>> kernels;
  for (const auto& A : config.cameras) kernels.push_back(camera_kernel(A, config.r));
  const auto points = camera_base_points(config);
  MultidegreeTable table(config.r, config.cameras.size());
  for (const auto& [d, unused] : table.entries()) {
    const bool ok = std::all_of(points.begin(), points.end(), [&](const ProjectivePoint& q) {
      for (std::size_t i = 0; i < kernels.size(); ++i) {
        if (d[i] >= 1 && kernels[i] != q) return true;
      }
      return false;
    });
    table.set(d, ok ? 1 : 0);
  }
  return table;
}

std::optional<MapSpec> coordinate_alignment_export(const CameraConfig& config) {
  config.validate();
  const std::size_t vars = config.r + 1;
  std::vector<MonomialIdeal> ideals;
  for (const auto& A : config.cameras) {
    auto m = A;
    const auto pivots = detail::row_reduce(m);
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      for (std::size_t c = 0; c < vars; ++c) {
        if (c != pivots[i] && m[i][c] != 0) return std::nullopt;
      }
      gens.push_back(ExponentVector::unit_vector(vars, pivots[i]));
    }
    if (gens.empty()) return std::nullopt;
    ideals.push_back(minimalize(vars, std::move(gens)));
  }
  return MapSpec::from_ideals(std::move(ideals));
}

}  // namespace nmv
