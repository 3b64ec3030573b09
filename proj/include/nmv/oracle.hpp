#pragma once

// Mixed multiplicities of the special fiber ring and of the saturated special
// fiber ring, obtained by brute force: count monomials in graded pieces of
// products of powers of the base ideals, then fit the Hilbert polynomial.

#include <vector>

#include "nmv/hilbert.hpp"
#include "nmv/map_spec.hpp"

namespace nmv {

/// dim_k [(I_1^{n_1} ... I_p^{n_p} : m^inf)]_{n.delta}.
Integer saturated_fiber_dimension(const MapSpec& spec, const GridPoint& n);
/// dim_k [I_1^{n_1} ... I_p^{n_p}]_{n.delta}.
Integer fiber_dimension(const MapSpec& spec, const GridPoint& n);

/// r + max delta_i + 2.
std::int64_t default_grid_offset(const MapSpec& spec);
/// r + 2.
unsigned default_grid_width(const MapSpec& spec);

struct OracleResult {
  MultidegreeTable table;
  StableFit fit;
};

OracleResult saturated_fiber_mixed_multiplicities(const MapSpec& spec, const GridOptions& options = {});
OracleResult special_fiber_mixed_multiplicities(const MapSpec& spec, const GridOptions& options = {});

struct BirationalityReport {
  MultidegreeTable saturated;
  MultidegreeTable special;
  /// saturated - special, entrywise.
  MultidegreeTable defect;
};

/// Throws InternalError if some special-fiber entry exceeds the saturated one.
BirationalityReport birationality_defect(const MapSpec& spec, const GridOptions& options = {});

}  // namespace nmv
