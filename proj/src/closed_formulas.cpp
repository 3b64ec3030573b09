#include "nmv/closed_formulas.hpp"

#include "nmv/error.hpp"

namespace nmv {
namespace {

void check_common(const FamilyInput& input) {
  if (input.r < 1) throw InputError("r must be at least 1");
  for (auto d : input.deltas) {
    if (d < 1) throw InputError("every delta_i must be a positive integer");
  }
}

Integer prefix_power(const FamilyInput& input, const TypeVector& d) {
  Integer out = 1;
  for (std::size_t i = 0; i < input.deltas.size(); ++i) out *= power(Integer(input.deltas[i]), d[i]);
  return out;
}

}  // namespace

Integer elementary_symmetric(std::size_t k, const std::vector<Integer>& vals) {
  if (k > vals.size()) throw InputError("e_k needs k <= number of values");
  // e[j] holds e_j of the prefix read so far.
  std::vector<Integer> e(k + 1, Integer(0));
  e[0] = 1;
  for (const auto& v : vals) {
    for (std::size_t j = k; j >= 1; --j) e[j] += v * e[j - 1];
  }
  return e[k];
}

std::vector<std::string> FamilyInput::asserted_hypotheses() const {
  std::vector<std::string> out;
  if (!deltas.empty()) out.push_back("I_1, ..., I_{p-1} are m-primary");
  if (family == Family::PerfectHeightTwo) {
    out.push_back("I_p is perfect of height two with Hilbert-Burch column degrees mu");
  } else {
    out.push_back("I_p is Gorenstein of height three");
    out.push_back("every nonzero entry of an alternating minimal presentation matrix of I_p has degree D");
  }
  out.push_back("I_p satisfies G_{r+1}");
  return out;
}

std::int64_t perfect_ht2_delta(const FamilyInput& input) {
  if (input.mu.empty()) throw InputError("mu must be nonempty");
  std::int64_t sum = 0;
  for (auto m : input.mu) {
    if (m < 1) throw InputError("every mu_i must be a positive integer");
    sum += m;
  }
  if (input.delta_p && *input.delta_p != sum) {
    throw InputError("delta_p = " + std::to_string(*input.delta_p) + " conflicts with sum(mu) = " + std::to_string(sum));
  }
  return sum;
}

MultidegreeTable perfect_ht2_table(const FamilyInput& input) {
  if (input.family != Family::PerfectHeightTwo) throw InputError("not a perfect height two input");
  check_common(input);
  perfect_ht2_delta(input);
  std::vector<Integer> mu(input.mu.begin(), input.mu.end());
  MultidegreeTable table(input.r, input.p());
  for (const auto& [d, unused] : table.entries()) {
    const std::size_t dp = d.back();
    const Integer e = dp <= mu.size() ? elementary_symmetric(dp, mu) : Integer(0);
    table.set(d, prefix_power(input, d) * e);
  }
  return table;
}

MultidegreeTable gorenstein_ht3_table(const FamilyInput& input) {
  if (input.family != Family::GorensteinHeightThree) throw InputError("not a Gorenstein height three input");
  check_common(input);
  if (input.m_p < 1 || input.m_p % 2 != 0) throw InputError("m_p must be a positive even integer");
  if (input.big_d < 1) throw InputError("D must be a positive integer");
  if (!input.delta_p || *input.delta_p < 1) throw InputError("delta_p must be a positive integer");
  MultidegreeTable table(input.r, input.p());
  for (const auto& [d, unused] : table.entries()) {
    const std::int64_t dp = d.back();
    Integer value;
    if (dp >= 3) {
      Integer sum = 0;
      if (input.m_p >= dp) {
        for (std::int64_t k = 0; k <= (input.m_p - dp) / 2; ++k) sum += binomial(input.m_p - 1 - 2 * k, dp - 1);
      }
      value = power(Integer(input.big_d), dp) * sum;
    } else {
      value = power(Integer(*input.delta_p), dp);
    }
    table.set(d, prefix_power(input, d) * value);
  }
  return table;
}

MultidegreeTable mprimary_table(unsigned r, const std::vector<std::int64_t>& deltas) {
  if (deltas.empty()) throw InputError("at least one delta is required");
  MultidegreeTable table(r, deltas.size());
  for (const auto& [d, unused] : table.entries()) {
    Integer v = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (deltas[i] < 1) throw InputError("every delta_i must be a positive integer");
      v *= power(Integer(deltas[i]), d[i]);
    }
    table.set(d, v);
  }
  return table;
}

}  // namespace nmv
