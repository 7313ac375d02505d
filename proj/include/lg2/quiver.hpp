#ifndef LG2_QUIVER_HPP
#define LG2_QUIVER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lg2/exact_matrix.hpp"
#include "lg2/fs_category.hpp"
#include "lg2/toric.hpp"

namespace lg2::quiver {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  int degree = 0;
};

/// A path stored in traversal order: arrows[0] is walked first. The empty
/// path at a vertex is its idempotent. Written text uses function notation,
/// so "beta*alpha" is the traversal (alpha, beta).
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  auto operator<=>(const Path& other) const = default;
};

using PathCombination = std::map<Path, long>;

/// lead -> sum of coefficient * path. Built from a relation with unit
/// leading coefficient.
struct RewriteRule {
  Path lead;
  PathCombination replacement;
};

class QuiverPresentation {
public:
  explicit QuiverPresentation(std::string name = "quiver");

  std::size_t add_vertex(const std::string& name);
  std::size_t add_arrow(const std::string& name, std::size_t source, std::size_t target, int degree = 0);

  /// Relation sum c_k p_k = 0 with one or two terms. The first path is the
  /// leading one and needs c = +-1; a second path must be shorter, or of equal
  /// length and smaller. Throws StructuralError on endpoint or degree
  /// mismatches.
  void add_relation(const std::vector<std::pair<long, Path>>& terms);

  /// Image of an arrow under the differential: same endpoints, degree + 1.
  void set_differential(const std::string& arrow, const PathCombination& image);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::map<std::size_t, PathCombination>& differential() const { return differential_; }

  std::size_t vertex_index(const std::string& name) const;
  std::size_t arrow_index(const std::string& name) const;

  Path idempotent(std::size_t vertex) const { return {vertex, vertex, {}}; }
  Path arrow_path(const std::string& name) const;
  int degree(const Path& p) const;

  /// "beta*alpha", or "e_v0" for an idempotent. Throws StructuralError for
  /// unknown names or non-composable factors.
  Path parse_path(const std::string& text) const;
  std::string path_name(const Path& p) const;

  /// Applies the rewrite rules until no lead occurs.
  PathCombination reduce(const Path& p) const;
  PathCombination reduce(const PathCombination& c) const;
  bool is_normal(const Path& p) const;

  /// p * q in function notation: first q, then p. Zero when not composable.
  PathCombination multiply(const Path& p, const Path& q) const;
  PathCombination multiply(const PathCombination& p, const PathCombination& q) const;

  /// Leibniz rule with Koszul signs: d(xy) = d(x) y + (-1)^|x| x d(y).
  PathCombination apply_differential(const Path& p) const;
  PathCombination apply_differential(const PathCombination& c) const;

  std::string to_text() const;
  static QuiverPresentation from_text(const std::string& text);

private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<std::pair<long, Path>>> relations_;
  std::map<std::size_t, PathCombination> differential_;
};

struct BasisPath {
  Path path;
  std::string name;
  int degree = 0;
};

/// Normal paths up to length_bound - 1. Throws DiagnosticError if a normal
/// path of length length_bound exists (basis still growing).
std::vector<BasisPath> path_basis(const QuiverPresentation& q, std::size_t length_bound = 4);

/// m(m(a,b),c) = m(a,m(b,c)) on every triple of basis paths.
bool multiplication_associative(const QuiverPresentation& q, std::size_t length_bound = 4);

struct HomComplex {
  std::vector<BasisPath> basis;
  fs::GradedModule chains;
  /// d^k : degree k -> degree k+1, rows indexed by the degree k+1 paths.
  std::map<int, IntMatrix> differential;
  std::map<int, std::size_t> cohomology;
};

/// Paths from vertex i to vertex j with the induced differential.
HomComplex hom_complex(const QuiverPresentation& q, std::size_t i, std::size_t j, std::size_t length_bound = 4);

/// d(d(a)) = 0 for every arrow a with a differential.
bool differential_squares_to_zero(const QuiverPresentation& q);

/// alpha: v0 -> v1, beta: v1 -> v0, relation beta*alpha = 0.
/// v0 stands for O and v1 for the extension bundle.
QuiverPresentation ordinary_quiver();

enum class DgDifferential { Zero, Literal };

/// alpha (degree 0) and alphabar (degree 1), both v0 -> v1; no relations.
/// Literal sets d(alpha) = alphabar. v0 stands for O(-E) and v1 for O.
QuiverPresentation dg_quiver(DgDifferential d);

/// Hom table of a directed quiver read off the cohomology of hom_complex.
fs::HomTable cohomology_table(const QuiverPresentation& q, std::size_t length_bound = 4);

/// beta*alpha = 0, alpha*beta != 0, (alpha*beta)^2 = 0.
bool composition_pattern_check();

/// Ext^* inputs on F_2 for O and C = O(-E).
struct TiltingInputs {
  toric::CohDims o_o;  // Ext(O, O)
  toric::CohDims c_o;  // Ext(O(-E), O)
  toric::CohDims o_c;  // Ext(O, O(-E))
  toric::CohDims c_c;  // Ext(O(-E), O(-E))
};

TiltingInputs tilting_inputs_from_toric(int box_margin = 0);

struct TiltingResult {
  long hom_o_o = 0, hom_o_e = 0, hom_e_o = 0, hom_e_e = 0;
  toric::CohDims ext_o_e, ext_e_o, ext_e_e, ext_e_c;
  bool higher_ext_vanish = false;
  std::string assumption;
  std::vector<std::string> steps;

  long total() const { return hom_o_o + hom_o_e + hom_e_o + hom_e_e; }
};

/// Rank chase through the long exact sequences of the triangle
/// O -> E -> O(-E) -> O[1]. The only input beyond the Ext table is the
/// rank of the connecting map Hom(O,O) -> Ext^1(O(-E),O), which is 1 for a
/// nontrivial extension. Throws DiagnosticError when the table is
/// inconsistent with that rank or leaves something undetermined.
TiltingResult end_algebra_dims_tilting(const TiltingInputs& inputs, long connecting_rank = 1);

/// K-group rank of a category generated by m exceptional objects.
long grothendieck_rank(long m);
long semiorthogonal_rank_sum(const std::vector<long>& parts);

} // namespace lg2::quiver

#endif
