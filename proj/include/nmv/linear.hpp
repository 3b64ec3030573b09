#pragma once

// Linear rational maps x -> (A_1 x, ..., A_p x): classical multiview varieties.

#include <optional>
#include <vector>

#include "nmv/map_spec.hpp"
#include "nmv/numeric.hpp"

namespace nmv {

using RationalMatrix = std::vector<std::vector<Rational>>;
using ProjectivePoint = std::vector<Rational>;

struct CameraConfig {
  unsigned r = 0;
  /// Camera i is an (m_i + 1) x (r + 1) matrix.
  std::vector<RationalMatrix> cameras;

  /// Shapes and r >= 1; throws InputError.
  void validate() const;
};

/// The first nonzero coordinate scaled to 1.
ProjectivePoint normalize(ProjectivePoint point);

/// Ker(A) as a normalized point when rank(A) = r, nullopt when rank(A) = r + 1.
/// Throws HypothesisError when rank(A) < r.
std::optional<ProjectivePoint> camera_kernel(const RationalMatrix& camera, unsigned r);

/// The base locus {Ker(A_i)}, each point listed once, sorted.
std::vector<ProjectivePoint> camera_base_points(const CameraConfig& config);

/// entry(d) = 1 iff every base point q has some i with Ker(A_i) != q and
/// d_i >= 1.
MultidegreeTable multidegree_support(const CameraConfig& config);

/// The monomial map with I_i = (x_k : e_k in the row space of A_i) when every
/// row space is spanned by coordinate vectors; nullopt otherwise.
std::optional<MapSpec> coordinate_alignment_export(const CameraConfig& config);

}  // namespace nmv
