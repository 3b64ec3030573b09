#pragma once

// Monomials and monomial ideals in k[x_0, ..., x_r].
//
// Exponent vectors are stored densely; the ambient variable count is tiny
// (r <= 6) for every problem this library targets.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nmv {

class ExponentVector {
 public:
  ExponentVector() = default;
  /// Throws InputError on a negative entry.
  explicit ExponentVector(std::vector<int> entries);

  static ExponentVector zero(std::size_t vars);
  static ExponentVector unit_vector(std::size_t vars, std::size_t index, int exponent = 1);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int total_degree() const { return degree_; }
  std::span<const int> entries() const { return entries_; }

  /// Componentwise <=, i.e. this monomial divides `other`.
  bool divides(const ExponentVector& other) const;
  ExponentVector with_entry(std::size_t index, int value) const;
  ExponentVector without_entry(std::size_t index) const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
  int degree_ = 0;
};

/// A monomial ideal held by its minimal generating set, sorted
/// lexicographically. The zero ideal has no generators; the unit ideal has
/// the single zero exponent vector.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(std::size_t vars);
  static MonomialIdeal unit(std::size_t vars);
  /// The irrelevant ideal (x_0, ..., x_r).
  static MonomialIdeal irrelevant(std::size_t vars);

  std::size_t ambient_vars() const { return vars_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().total_degree() == 0; }
  bool contains(const ExponentVector& monomial) const;
  /// True when every generator of `this` lies in `other`.
  bool is_subset_of(const MonomialIdeal& other) const;
  /// The common degree of all generators, if there is one.
  std::optional<int> generation_degree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t vars, std::vector<ExponentVector> gens)
      : vars_(vars), gens_(std::move(gens)) {}

  friend MonomialIdeal minimalize(std::size_t vars, std::vector<ExponentVector> gens);

  std::size_t vars_ = 0;
  std::vector<ExponentVector> gens_;
};

/// Reduces `gens` to the divisibility antichain generating the same ideal.
/// Throws InputError if some vector does not have length `vars`.
MonomialIdeal minimalize(std::size_t vars, std::vector<ExponentVector> gens);

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned n);
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);

/// (I : x_j^inf): each generator with its x_j exponent set to zero.
MonomialIdeal saturate_by_variable(const MonomialIdeal& ideal, std::size_t j);
/// (I : m^inf) as the intersection of the variable colons.
MonomialIdeal saturate_irrelevant(const MonomialIdeal& ideal);

/// Number of degree-`degree` monomials lying in the ideal, by enumerating
/// the staircase.
std::uint64_t graded_piece_dimension(const MonomialIdeal& ideal, int degree);

/// Same count by inclusion-exclusion over generator subsets, with terms
/// merged on equal lcm and pruned once the lcm degree exceeds `degree`.
std::uint64_t graded_piece_dimension_inclusion_exclusion(const MonomialIdeal& ideal, int degree);

/// dim_k [(I : m^inf)]_degree, computed directly from the generators of I
/// without materializing the saturation.
std::uint64_t saturated_piece_dimension(const MonomialIdeal& ideal, int degree);

/// Length of R_p / I R_p at the coordinate point p where only x_j is
/// nonzero: the number of standard monomials after setting x_j = 1.
/// std::nullopt stands for an infinite colength (the dehomogenized ideal is
/// not cofinite).
std::optional<std::uint64_t> local_colength(const MonomialIdeal& ideal, std::size_t j);

/// Parses "x^2*z" against `variables`, or "x0^2*x2" when `variables` is
/// empty (then `vars` fixes the ambient count). "1" is the unit monomial.
/// Throws InputError.
ExponentVector parse_monomial(std::string_view text, std::span<const std::string> variables,
                              std::size_t vars);

std::string format_monomial(const ExponentVector& monomial,
                            std::span<const std::string> variables = {});

}  // namespace nmv
