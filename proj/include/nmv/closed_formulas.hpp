#pragma once

// Closed multidegree formulas: m-primary factors followed by one perfect
// ideal of height two or one Gorenstein ideal of height three, and the
// m-primary case on its own. Hypotheses on the ideals are asserted by the
// caller, never verified here.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmv/map_spec.hpp"

namespace nmv {

/// e_k(vals); throws InputError unless k <= vals.size().
Integer elementary_symmetric(std::size_t k, const std::vector<Integer>& vals);

enum class Family { PerfectHeightTwo, GorensteinHeightThree };

struct FamilyInput {
  unsigned r = 0;
  /// delta_1, ..., delta_{p-1}.
  std::vector<std::int64_t> deltas;
  Family family = Family::PerfectHeightTwo;
  /// Column degrees mu_1, ..., mu_{m_p} of the Hilbert-Burch matrix.
  std::vector<std::int64_t> mu;
  std::int64_t m_p = 0;
  std::int64_t big_d = 0;
  /// Required for the Gorenstein family; for the perfect family it must
  /// equal sum(mu) when given.
  std::optional<std::int64_t> delta_p;

  std::size_t p() const { return deltas.size() + 1; }
  /// Hypotheses the caller vouches for, in words.
  std::vector<std::string> asserted_hypotheses() const;
};

/// sum(mu); throws InputError on a conflicting delta_p or non-positive data.
std::int64_t perfect_ht2_delta(const FamilyInput& input);

MultidegreeTable perfect_ht2_table(const FamilyInput& input);
MultidegreeTable gorenstein_ht3_table(const FamilyInput& input);
MultidegreeTable mprimary_table(unsigned r, const std::vector<std::int64_t>& deltas);

}  // namespace nmv
