#ifndef LG2_POLY_HPP
#define LG2_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lg2/rational.hpp"

namespace lg2 {

/// Ordered groups of variable names, e.g. {{x,y},{z,w},{r,s}} for
/// P^1 x P^1 x P^1. Fixed when a polynomial is created.
class VariableBlocks {
public:
  VariableBlocks() = default;
  explicit VariableBlocks(std::vector<std::vector<std::string>> blocks);

  const std::vector<std::vector<std::string>>& blocks() const { return blocks_; }
  const std::vector<std::string>& variables() const { return flat_; }
  std::size_t num_variables() const { return flat_.size(); }
  std::size_t num_blocks() const { return blocks_.size(); }
  std::size_t block_of(std::size_t var_index) const { return block_index_[var_index]; }

  /// Throws StructuralError for unknown names.
  std::size_t index_of(const std::string& name) const;
  bool contains(const std::string& name) const;

  friend bool operator==(const VariableBlocks& a, const VariableBlocks& b) { return a.blocks_ == b.blocks_; }

  /// "[x,y;z,w]"
  std::string to_string() const;

private:
  std::vector<std::vector<std::string>> blocks_;
  std::vector<std::string> flat_;
  std::vector<std::size_t> block_index_;
};

using Exponents = std::vector<int>;

/// Polynomial over Q(i) in grouped variable blocks.
///
/// Exponent vectors are dense over the flattened variable list. No stored
/// term has a zero coefficient. The multidegree is recomputed on every
/// construction: one total degree per block when all terms agree,
/// otherwise std::nullopt (also for the zero polynomial).
class MultiHomPoly {
public:
  using Terms = std::map<Exponents, GaussianRational>;

  MultiHomPoly() = default;
  explicit MultiHomPoly(VariableBlocks blocks);
  MultiHomPoly(VariableBlocks blocks, Terms terms);

  static MultiHomPoly constant(const VariableBlocks& blocks, const GaussianRational& c);
  static MultiHomPoly variable(const VariableBlocks& blocks, const std::string& name);

  const VariableBlocks& blocks() const { return blocks_; }
  const Terms& terms() const { return terms_; }
  const std::optional<std::vector<int>>& multidegree() const { return multidegree_; }

  bool is_zero() const { return terms_.empty(); }
  /// Constant polynomials, including zero.
  bool is_constant() const;
  /// Coefficient of the constant term (zero if absent).
  GaussianRational constant_term() const;
  /// Degree in one variable.
  int degree_in(std::size_t var_index) const;
  bool uses_variable(std::size_t var_index) const { return degree_in(var_index) > 0; }

  MultiHomPoly operator-() const;
  friend MultiHomPoly operator+(const MultiHomPoly& p, const MultiHomPoly& q);
  friend MultiHomPoly operator-(const MultiHomPoly& p, const MultiHomPoly& q);
  friend MultiHomPoly operator*(const MultiHomPoly& p, const MultiHomPoly& q);
  friend MultiHomPoly operator*(const GaussianRational& c, const MultiHomPoly& p);
  friend bool operator==(const MultiHomPoly& p, const MultiHomPoly& q)
  {
    return p.blocks_ == q.blocks_ && p.terms_ == q.terms_;
  }

  MultiHomPoly pow(unsigned exponent) const;

  /// Canonical rendering: terms in descending exponent order, every
  /// coefficient explicit, e.g. "1*x^2 + 1*y*z + -1". Zero renders "0".
  std::string to_string() const;
  static MultiHomPoly parse(const VariableBlocks& blocks, const std::string& text);

private:
  void normalize();

  VariableBlocks blocks_;
  Terms terms_;
  std::optional<std::vector<int>> multidegree_;
};

MultiHomPoly poly_add(const MultiHomPoly& p, const MultiHomPoly& q);
MultiHomPoly poly_mul(const MultiHomPoly& p, const MultiHomPoly& q);

/// Replaces each mapped variable by its image. Unmapped variables stay.
/// Images must live over the same blocks as p.
MultiHomPoly substitute(const MultiHomPoly& p, const std::map<std::string, MultiHomPoly>& images);

MultiHomPoly derivative(const MultiHomPoly& p, const std::string& var);

/// Row i, column j holds d polys[i] / d vars[j].
std::vector<std::vector<MultiHomPoly>> jacobian(const std::vector<MultiHomPoly>& polys,
                                                const std::vector<std::string>& vars);

GaussianRational eval(const MultiHomPoly& p, const std::map<std::string, GaussianRational>& point);

/// Returns c != 0 with p == c * q, if one exists. Zero polynomials are
/// never proportional to anything.
std::optional<GaussianRational> proportional(const MultiHomPoly& p, const MultiHomPoly& q);

/// Exact division by a single variable; requires every term to contain it.
MultiHomPoly divide_by_variable(const MultiHomPoly& p, std::size_t var_index);

} // namespace lg2

#endif
