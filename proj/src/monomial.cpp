#include "nmv/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "dense_box.hpp"
#include "nmv/error.hpp"
#include "nmv/numeric.hpp"
#include "staircase.hpp"

namespace nmv {

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw InputError("negative exponent in monomial");
    degree_ += e;
  }
}

ExponentVector ExponentVector::zero(std::size_t vars) {
  return ExponentVector(std::vector<int>(vars, 0));
}

ExponentVector ExponentVector::unit_vector(std::size_t vars, std::size_t index, int exponent) {
  std::vector<int> e(vars, 0);
  e.at(index) = exponent;
  return ExponentVector(std::move(e));
}

bool ExponentVector::divides(const ExponentVector& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::with_entry(std::size_t index, int value) const {
  std::vector<int> e = entries_;
  e.at(index) = value;
  return ExponentVector(std::move(e));
}

ExponentVector ExponentVector::without_entry(std::size_t index) const {
  std::vector<int> e;
  e.reserve(entries_.size() - 1);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i != index) e.push_back(entries_[i]);
  }
  return ExponentVector(std::move(e));
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  std::vector<int> e(a.entries_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries_[i];
  return ExponentVector(std::move(e));
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  std::vector<int> e(a.entries_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.entries_[i]);
  return ExponentVector(std::move(e));
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal MonomialIdeal::zero(std::size_t vars) { return MonomialIdeal(vars, {}); }

MonomialIdeal MonomialIdeal::unit(std::size_t vars) {
  return MonomialIdeal(vars, {ExponentVector::zero(vars)});
}

MonomialIdeal MonomialIdeal::irrelevant(std::size_t vars) {
  std::vector<ExponentVector> gens;
  for (std::size_t j = 0; j < vars; ++j) gens.push_back(ExponentVector::unit_vector(vars, j));
  return minimalize(vars, std::move(gens));
}

bool MonomialIdeal::contains(const ExponentVector& monomial) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const ExponentVector& g) { return g.divides(monomial); });
}

bool MonomialIdeal::is_subset_of(const MonomialIdeal& other) const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const ExponentVector& g) { return other.contains(g); });
}

std::optional<int> MonomialIdeal::generation_degree() const {
  if (gens_.empty()) return std::nullopt;
  const int d = gens_.front().total_degree();
  for (const auto& g : gens_) {
    if (g.total_degree() != d) return std::nullopt;
  }
  return d;
}

MonomialIdeal minimalize(std::size_t vars, std::vector<ExponentVector> gens) {
  for (const auto& g : gens) {
    if (g.size() != vars) {
      throw InputError("monomial has " + std::to_string(g.size()) + " exponents, expected " +
                       std::to_string(vars));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const bool equigenerated =
      std::all_of(gens.begin(), gens.end(), [&](const ExponentVector& g) {
        return g.total_degree() == gens.front().total_degree();
      });
  if (equigenerated) return MonomialIdeal(vars, std::move(gens));

  // A generator can only be divided by one of strictly smaller degree.
  std::vector<ExponentVector> by_degree = gens;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [](const ExponentVector& a, const ExponentVector& b) {
                     return a.total_degree() < b.total_degree();
                   });
  std::vector<ExponentVector> kept;
  for (auto& g : by_degree) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& k) {
      return k.total_degree() < g.total_degree() && k.divides(g);
    });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(vars, std::move(kept));
}

namespace {

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient_vars() != b.ambient_vars()) {
    throw InputError("ideals live in rings with different variable counts");
  }
}

}  // namespace

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<ExponentVector> gens;
  gens.reserve(a.generator_count() * b.generator_count());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g + h);
  }
  return minimalize(a.ambient_vars(), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned n) {
  MonomialIdeal result = MonomialIdeal::unit(ideal.ambient_vars());
  for (unsigned i = 0; i < n; ++i) result = ideal_product(result, ideal);
  return result;
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<ExponentVector> gens;
  gens.reserve(a.generator_count() * b.generator_count());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return minimalize(a.ambient_vars(), std::move(gens));
}

MonomialIdeal saturate_by_variable(const MonomialIdeal& ideal, std::size_t j) {
  if (j >= ideal.ambient_vars()) {
    throw InputError("variable index " + std::to_string(j) + " out of range");
  }
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.generator_count());
  for (const auto& g : ideal.generators()) gens.push_back(g.with_entry(j, 0));
  return minimalize(ideal.ambient_vars(), std::move(gens));
}

MonomialIdeal saturate_irrelevant(const MonomialIdeal& ideal) {
  const std::size_t vars = ideal.ambient_vars();
  if (ideal.is_zero()) return ideal;
  MonomialIdeal result = saturate_by_variable(ideal, 0);
  for (std::size_t j = 1; j < vars; ++j) {
    result = ideal_intersection(result, saturate_by_variable(ideal, j));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Counting

namespace {

std::uint64_t count_monomials_of_degree(std::size_t vars, int degree) {
  if (degree < 0) return 0;
  return binomial(degree + static_cast<std::int64_t>(vars) - 1,
                  static_cast<std::int64_t>(vars) - 1)
      .convert_to<std::uint64_t>();
}

std::uint64_t graded_piece_dimension_by_scan(const MonomialIdeal& ideal, int degree) {
  std::uint64_t count = 0;
  const auto& gens = ideal.generators();
  detail::for_each_composition(degree, ideal.ambient_vars(), [&](std::span<const int> u) {
    for (const auto& g : gens) {
      bool divides = true;
      for (std::size_t i = 0; i < u.size() && divides; ++i) divides = g[i] <= u[i];
      if (divides) {
        ++count;
        return;
      }
    }
  });
  return count;
}

}  // namespace

std::uint64_t graded_piece_dimension(const MonomialIdeal& ideal, int degree) {
  if (ideal.is_zero() || degree < 0) return 0;
  const std::size_t vars = ideal.ambient_vars();
  if (vars == 1) return ideal.generators().front()[0] <= degree ? 1 : 0;
  if (!detail::PivotStaircase::fits(vars, degree)) {
    return graded_piece_dimension_by_scan(ideal, degree);
  }
  const detail::PivotStaircase stairs(ideal.generators(), vars, 0, degree);
  std::uint64_t count = 0;
  detail::for_each_composition(degree, vars, [&](std::span<const int> u) {
    if (stairs.contains(u)) ++count;
  });
  return count;
}

std::uint64_t graded_piece_dimension_inclusion_exclusion(const MonomialIdeal& ideal, int degree) {
  if (ideal.is_zero() || degree < 0) return 0;
  const std::size_t vars = ideal.ambient_vars();
  // Signed coefficients of lcm terms in 1 - prod (1 - [g | u]).
  std::map<ExponentVector, std::int64_t> terms;
  for (const auto& g : ideal.generators()) {
    if (g.total_degree() > degree) continue;
    std::map<ExponentVector, std::int64_t> next = terms;
    next[g] += 1;
    for (const auto& [l, c] : terms) {
      ExponentVector m = lcm(l, g);
      if (m.total_degree() <= degree) next[m] -= c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    terms = std::move(next);
  }
  std::int64_t total = 0;
  for (const auto& [l, c] : terms) {
    total += c * static_cast<std::int64_t>(count_monomials_of_degree(vars, degree - l.total_degree()));
  }
  if (total < 0) throw InternalError("inclusion-exclusion produced a negative count");
  return static_cast<std::uint64_t>(total);
}

std::uint64_t saturated_piece_dimension(const MonomialIdeal& ideal, int degree) {
  if (ideal.is_zero() || degree < 0) return 0;
  const std::size_t vars = ideal.ambient_vars();
  if (vars == 1) return 1;  // (x^a : x^inf) is the unit ideal
  if (!detail::PivotStaircase::fits(vars, degree)) {
    return graded_piece_dimension_by_scan(saturate_irrelevant(ideal), degree);
  }
  std::vector<detail::PivotStaircase> colons;
  colons.reserve(vars);
  for (std::size_t j = 0; j < vars; ++j) colons.emplace_back(ideal.generators(), vars, j, degree);
  std::uint64_t count = 0;
  detail::for_each_composition(degree, vars, [&](std::span<const int> u) {
    for (const auto& colon : colons) {
      if (!colon.in_colon(u)) return;
    }
    ++count;
  });
  return count;
}

std::optional<std::uint64_t> local_colength(const MonomialIdeal& ideal, std::size_t j) {
  const std::size_t vars = ideal.ambient_vars();
  if (j >= vars) throw InputError("variable index " + std::to_string(j) + " out of range");
  if (ideal.is_zero()) return std::nullopt;
  std::vector<ExponentVector> local;
  local.reserve(ideal.generator_count());
  for (const auto& g : ideal.generators()) {
    local.push_back(g.without_entry(j));
    if (local.back().total_degree() == 0) return 0;
  }
  const std::size_t k = vars - 1;
  // Cofinite iff every remaining variable has a pure power among generators.
  std::vector<int> extents(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    int best = 0;
    for (const auto& g : local) {
      if (g[i] == g.total_degree() && (best == 0 || g[i] < best)) best = g[i];
    }
    if (best == 0) return std::nullopt;
    extents[i] = best;
  }
  if (detail::DenseBox::cell_count(extents) > detail::kMaxDenseCells) {
    throw InternalError("local colength box too large");
  }
  detail::DenseBox box(extents);
  std::vector<std::uint8_t> in_ideal(box.cells(), 0);
  for (const auto& g : local) {
    if (box.inside(g.entries())) in_ideal[box.flat(g.entries())] = 1;
  }
  box.sweep(in_ideal, [](std::uint8_t& dst, std::uint8_t src) { dst |= src; });
  return static_cast<std::uint64_t>(std::count(in_ideal.begin(), in_ideal.end(), 0));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_exponent(std::string_view text, std::string_view whole) {
  text = trim(text);
  if (text.empty() || text.size() > 6 ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw InputError("bad exponent in monomial '" + std::string(whole) + "'");
  }
  return std::stoi(std::string(text));
}

}  // namespace

ExponentVector parse_monomial(std::string_view text, std::span<const std::string> variables,
                              std::size_t vars) {
  const std::string_view whole = text;
  if (!variables.empty()) vars = variables.size();
  if (vars == 0) throw InputError("monomial ring has no variables");
  text = trim(text);
  if (text.empty()) throw InputError("empty monomial");
  std::vector<int> exps(vars, 0);
  if (text == "1") return ExponentVector(std::move(exps));

  while (true) {
    const auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    std::string_view name = factor;
    int exponent = 1;
    if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
      name = trim(factor.substr(0, caret));
      exponent = parse_exponent(factor.substr(caret + 1), whole);
    }
    std::size_t index = vars;
    if (!variables.empty()) {
      for (std::size_t i = 0; i < variables.size(); ++i) {
        if (variables[i] == name) index = i;
      }
    } else if (name.size() >= 2 && name.front() == 'x' &&
               std::all_of(name.begin() + 1, name.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
               name.size() <= 4) {
      index = static_cast<std::size_t>(std::stoi(std::string(name.substr(1))));
    }
    if (index >= vars) {
      throw InputError("unknown variable '" + std::string(name) + "' in monomial '" +
                       std::string(whole) + "'");
    }
    exps[index] += exponent;
    if (star == std::string_view::npos) break;
    text = text.substr(star + 1);
  }
  return ExponentVector(std::move(exps));
}

std::string format_monomial(const ExponentVector& monomial, std::span<const std::string> variables) {
  std::string out;
  for (std::size_t i = 0; i < monomial.size(); ++i) {
    if (monomial[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables.empty() ? "x" + std::to_string(i) : variables[i];
    if (monomial[i] > 1) out += "^" + std::to_string(monomial[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace nmv
