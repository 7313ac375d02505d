#ifndef LG2_MIRROR_HPP
#define LG2_MIRROR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lg2::mirror {

/// Simple coherent sheaf on P^1: a line bundle O(t) or a skyscraper at one
/// of two symbolic points p != q.
struct SimpleP1Object {
  enum class Kind { LineBundle, Skyscraper };
  Kind kind = Kind::LineBundle;
  int t = 0;        // line bundles
  char point = 'p'; // skyscrapers: 'p' or 'q'

  static SimpleP1Object line_bundle(int t) { return {Kind::LineBundle, t, 'p'}; }
  static SimpleP1Object skyscraper(char point);

  bool operator==(const SimpleP1Object& o) const;
  std::string to_string() const;
};

struct ExtDims {
  long hom = 0;
  long ext1 = 0;
  bool operator==(const ExtDims& o) const = default;
};

/// Degree -> dimension; zero dimensions are never stored.
using ExtPattern = std::map<int, long>;

ExtDims ext_p1(const SimpleP1Object& x, const SimpleP1Object& y);

/// Hom^*(X[-shift_x], Y[-shift_y]): the ext_p1 pattern moved up by
/// shift_y - shift_x, so X[-i] sits in degree i.
ExtPattern shifted_pattern(const SimpleP1Object& x, const SimpleP1Object& y, int shift_x, int shift_y);

std::string pattern_to_string(const ExtPattern& p);

struct SearchOptions {
  ExtPattern target{{0, 1}, {1, 1}};
  bool require_simple_end = true; // End(F) = {0:1} for both objects
  bool require_directed = true;   // Hom^*(F1, F0) = 0
  bool allow_self_pairs = false;
};

struct MirrorWitness {
  SimpleP1Object first, second;
  int shift_first = 0, shift_second = 0;
};

/// Exhausts O(t) for |t| <= t_range and both skyscrapers, paired in order,
/// with shifts in [-shift_range, shift_range]. Candidates are visited in the
/// order 0, -1, 1, -2, 2, ... for both t and shifts.
std::optional<MirrorWitness> search_mirror_pair(int t_range, int shift_range, const SearchOptions& options = {});

struct ExclusionRow {
  std::string case_name;
  std::string reason;
  std::size_t pairs_checked = 0;
  bool verified = false; // the reason holds on every pair of this case
};

/// Why no pair of each case reproduces the target {0:1, 1:1}.
std::vector<ExclusionRow> exclusion_table(int t_range);

enum class DimensionVerdict { Excluded, Admissible };

/// Excluded iff n + 1 > m (the Grothendieck group of a smooth projective
/// n-fold needs rank at least n + 1). Throws PreconditionError unless
/// n >= 0 and m >= 1.
DimensionVerdict dimension_bound_verdict(int n, int m);

} // namespace lg2::mirror

#endif
