#pragma once

// Multidegrees of monomial rational maps: the mixed-volume formula, the base
// locus and its local mixed multiplicities, the degree formula, and the
// multidegrees of the graph.

#include <cstddef>
#include <optional>
#include <vector>

#include "nmv/hilbert.hpp"
#include "nmv/map_spec.hpp"
#include "nmv/polytope.hpp"

namespace nmv {

/// pi(Gamma(I_i)) for each base ideal, in R^r.
std::vector<LatticePolytope> projected_newton_polytopes(const MapSpec& spec);

/// entry(d) = MV_r of d_i copies of pi(Gamma(I_i)), i.e. deg(G) * deg^d(Y).
MultidegreeTable monomial_multidegrees(const MapSpec& spec);

/// Whether pi(Gamma(I_1)) + ... + pi(Gamma(I_p)) is full-dimensional.
bool generic_finiteness_check(const MapSpec& spec);

struct BaseLocusReport {
  /// Projective dimension of V(I_1 ... I_p); -1 when empty.
  int dimension = -1;
  /// Minimal primes of I_1 ... I_p other than the irrelevant ideal, each
  /// as the sorted list of variable indices generating it.
  std::vector<std::vector<std::size_t>> minimal_primes;
  /// For dimension 0: the coordinate points, j meaning only x_j is nonzero.
  std::vector<std::size_t> points;
  /// e_d(B(G)), filled only on request and only when dimension <= 0.
  std::optional<MultidegreeTable> mixed_mults;
};

BaseLocusReport base_locus(const MapSpec& spec, bool with_mixed_mults = false, const GridOptions& options = {});

/// e_d(B(G)) as the sum over base points of the local mixed multiplicities
/// e_d(R_p; I_1, ..., I_p). Throws HypothesisError for a positive-dimensional
/// base locus.
MultidegreeTable base_locus_mixed_multiplicities(const MapSpec& spec, const GridOptions& options = {});

struct DegreeFormulaReport {
  MultidegreeTable delta_powers;
  MultidegreeTable base_mults;
  /// delta_powers - base_mults.
  MultidegreeTable table;
  bool generically_finite = false;
};

/// Throws HypothesisError for a positive-dimensional base locus (naming the
/// offending prime) and InternalError if some difference is negative.
DegreeFormulaReport degree_formula_table(const MapSpec& spec, const GridOptions& options = {});

bool upper_bound_check(const MapSpec& spec, const MultidegreeTable& table);

struct GraphReport {
  /// Types (d_0, d_1, ..., d_p) with |d| = r.
  MultidegreeTable table;
  StableFit fit;
  /// Entries with d_0 = 0, as a table over (d_1, ..., d_p).
  MultidegreeTable slice;
  /// The saturated special fiber multiplicities the slice is compared with.
  MultidegreeTable saturated_fiber;
  bool slice_matches = false;
};

GraphReport graph_multidegrees(const MapSpec& spec, const GridOptions& options = {});

}  // namespace nmv
