#ifndef LG2_FS_CATEGORY_HPP
#define LG2_FS_CATEGORY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lg2::fs {

struct BasisElement {
  std::string name;
  int degree = 0;
};

class GradedModule {
public:
  GradedModule() = default;

  /// Throws StructuralError on a duplicate name.
  void add(const std::string& name, int degree);

  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::map<int, std::size_t>& ranks() const { return ranks_; }
  std::size_t rank(int degree) const;
  std::size_t total_rank() const { return basis_.size(); }
  long euler_characteristic() const;

  bool operator==(const GradedModule& other) const = default;

private:
  std::vector<BasisElement> basis_;
  std::map<int, std::size_t> ranks_;
};

struct Generator {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  int degree = 0;
  bool identity = false;

  bool operator==(const Generator& other) const = default;
};

/// m_k(inputs...) contributes coefficient * output. Inputs are in path
/// order: inputs[0] starts at the lowest object and each next input starts
/// where the previous one ends.
struct ProductEntry {
  std::vector<std::string> inputs;
  std::string output;
  long coefficient = 1;

  std::size_t arity() const { return inputs.size(); }
  bool operator==(const ProductEntry& other) const = default;
};

enum class Coefficients { Integers, Rationals };

class DirectedAInfCategory {
public:
  explicit DirectedAInfCategory(std::string name = "category", Coefficients ring = Coefficients::Integers);

  /// Adds an object with its identity generator "id_<name>" in degree 0.
  std::size_t add_object(const std::string& name);

  /// Generator of hom(source, target), source < target. Adding generators
  /// drops any certification of m1.
  void add_generator(const std::string& name, std::size_t source, std::size_t target, int degree);

  /// Throws StructuralError for unknown names, non-composable chains, a
  /// wrong source/target of the output, a violated degree rule or a zero
  /// coefficient.
  void add_product(const ProductEntry& entry);

  /// m2(id, a) = a = m2(a, id) for every non-identity generator a and
  /// m2(id_i, id_i) = id_i.
  void add_unit_products();

  /// Marks m1 as zero by an independent computation (the Morse model).
  void certify_zero_differential(bool certified = true) { m1_certified_ = certified; }
  bool differential_certified() const { return m1_certified_; }

  const std::string& name() const { return name_; }
  Coefficients coefficients() const { return ring_; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<ProductEntry>& products() const { return products_; }

  const Generator& generator(const std::string& name) const;
  bool has_generator(const std::string& name) const;
  std::string identity_of(std::size_t object) const;
  std::size_t object_index(const std::string& name) const;

  /// Empty module for i > j.
  GradedModule hom(std::size_t i, std::size_t j) const;

  /// Re-runs every entry check; throws StructuralError.
  void validate() const;

  /// Linear combination m_k(chain) read off the product entries.
  std::map<std::string, long> apply(const std::vector<std::string>& chain) const;

  /// Composable generator chains of length 1..max_length (identities
  /// included unless skip_identities).
  std::vector<std::vector<std::string>> composable_chains(std::size_t max_length, bool skip_identities) const;

  std::string to_text() const;
  static DirectedAInfCategory from_text(const std::string& text);

  bool operator==(const DirectedAInfCategory& other) const;

private:
  void check_entry(const ProductEntry& entry) const;

  std::string name_;
  Coefficients ring_;
  std::vector<std::string> objects_;
  std::vector<Generator> generators_;
  std::map<std::string, std::size_t> index_;
  std::vector<ProductEntry> products_;
  bool m1_certified_ = false;
};

/// Objects (L0, L1); hom(L0,L1) spanned by x0 (degree 0) and x1 (degree 1);
/// only unit products; m1 certified zero by the Morse model.
DirectedAInfCategory lg2_category();

/// Sum over r + s + t = n, s >= 1, of
///   (-1)^(r + s*t + s*(|a_1|+...+|a_r|)) m_{r+1+t}(a_1..a_r, m_s(a_{r+1}..a_{r+s}), ..., a_n)
/// on every composable basis chain of length n <= k_max; true iff all sums
/// vanish. Throws PreconditionError for k_max < 2, StructuralError for a
/// malformed category.
bool check_a_infinity(const DirectedAInfCategory& cat, std::size_t k_max);

/// First failing chain, if any (same relation as check_a_infinity).
std::optional<std::vector<std::string>> a_infinity_violation(const DirectedAInfCategory& cat, std::size_t k_max);

bool check_strict_unitality(const DirectedAInfCategory& cat);

struct VanishingCandidate {
  std::size_t arity = 0;
  std::vector<std::string> chain;
  int target_degree = 0;

  bool operator==(const VanishingCandidate& other) const = default;
};

/// Composable chains of non-identity generators of length <= max_arity
/// whose output degree sum + 2 - k is carried by some generator of the
/// target hom. Arity-1 slots are left out when the category certifies
/// m1 = 0 and respect_certified_differential is set.
std::vector<VanishingCandidate> degree_forced_vanishing(const DirectedAInfCategory& cat, std::size_t max_arity = 6,
                                                        bool respect_certified_differential = true);

enum class MorseGrading {
  Index,   // deg(p) = ind(p): minimum in degree 0
  CoIndex, // deg(p) = n - ind(p)
};

struct MorseComplex {
  struct CriticalPoint {
    std::string name;
    int index = 0;
    int degree = 0;
  };
  std::vector<CriticalPoint> points;
  /// Signed flow lines (from, to, sign) between critical points of
  /// adjacent index.
  struct FlowLine {
    std::size_t from = 0;
    std::size_t to = 0;
    int sign = 1;
  };
  std::vector<FlowLine> flow_lines;
  /// Matrix of d : C^0 -> C^1 (rows: degree-1 points, cols: degree-0 points).
  std::vector<std::vector<long>> differential;
  GradedModule cohomology;
};

/// Height function on S^1 with one minimum and one maximum.
MorseComplex morse_circle_complex(MorseGrading grading = MorseGrading::Index);
GradedModule morse_circle_floer(MorseGrading grading = MorseGrading::Index);

/// Degree ranks per ordered object pair (i <= j).
class HomTable {
public:
  HomTable() = default;
  explicit HomTable(std::vector<std::string> objects);

  void set(std::size_t i, std::size_t j, std::map<int, std::size_t> ranks);
  std::map<int, std::size_t> at(std::size_t i, std::size_t j) const;
  const std::vector<std::string>& objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }

  /// Same table for X_k[shift_k]: Hom(X_i[s_i], X_j[s_j])^d = Hom(X_i, X_j)^(d + s_j - s_i).
  HomTable shifted(const std::vector<int>& shifts) const;

  /// Rows like [[1, (1,1)], [0, 1]]: a lone degree-0 entry prints as its
  /// rank, anything else as the tuple of ranks from the lowest to the
  /// highest occupied degree, with an offset prefix when that is not 0.
  std::string to_string() const;

  /// Compares ranks only; object names are ignored.
  bool same_ranks(const HomTable& other) const;

private:
  std::vector<std::string> objects_;
  std::map<std::pair<std::size_t, std::size_t>, std::map<int, std::size_t>> entries_;
};

HomTable hom_table(const DirectedAInfCategory& cat);

/// Equal ranks, optionally after shifting each object of t2 by an integer in
/// [-shift_window, shift_window]. Window 0 means no shifts.
bool tables_equal(const HomTable& t1, const HomTable& t2, int shift_window = 0);

/// (O, O(1)) on P^1: hom(0,1) has rank 2 in degree 0.
HomTable p1_mirror_table();

} // namespace lg2::fs

#endif
