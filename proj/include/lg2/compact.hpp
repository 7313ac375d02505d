#ifndef LG2_COMPACT_HPP
#define LG2_COMPACT_HPP

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lg2/chart_elimination.hpp"
#include "lg2/exact_matrix.hpp"
#include "lg2/poly.hpp"

namespace lg2::compact {

/// Point of a product of projective spaces; factors compare up to a
/// nonzero scalar each.
class MultiProjPoint {
public:
  /// Throws PreconditionError if some factor is all zero or empty.
  explicit MultiProjPoint(std::vector<std::vector<GaussianRational>> factors);

  const std::vector<std::vector<GaussianRational>>& factors() const { return factors_; }
  bool operator==(const MultiProjPoint& other) const;
  std::string to_string() const;

private:
  std::vector<std::vector<GaussianRational>> factors_;
};

/// Scalar-multiple test for coordinate tuples of equal length.
bool projectively_equal(const std::vector<GaussianRational>& u, const std::vector<GaussianRational>& v);

/// A = [[x, z], [y, w]] with xw - yz = 1: columns (x,y) and (z,w).
struct Sl2GroupElement {
  GaussianRational x, y, z, w;

  /// Throws PreconditionError unless xw - yz = 1.
  static Sl2GroupElement make(GaussianRational x, GaussianRational y, GaussianRational z, GaussianRational w);
  ExactMatrix matrix() const;
};

/// Word of length 1..6 in [[1,1],[0,1]], [[1,0],[1,1]] and their inverses.
Sl2GroupElement random_sl2(std::mt19937_64& rng);

/// Blocks [x,y,z,t] and x^2 + yz - t^2.
MultiHomPoly homogenize_orbit();

/// Homogenizes a single-block polynomial with a new last variable.
MultiHomPoly homogenize(const MultiHomPoly& p, const std::string& new_variable);

/// Symmetric Gram matrix G with q(v) = v^T G v for a quadratic form.
ExactMatrix gram_matrix(const MultiHomPoly& quadratic_form);

struct QuadricReport {
  MultiHomPoly homogenized;
  MultiHomPoly transformed;    // after x -> x - t, t -> x + t
  MultiHomPoly segre_renamed;  // ad - bc with a -> y, b -> 2x, c -> 2t, d -> z
  std::optional<GaussianRational> scalar; // transformed = scalar * segre_renamed
  std::size_t gram_rank = 0;
  MultiHomPoly at_infinity;    // t = 0
  MultiHomPoly at_infinity_signed; // after z -> -z: x^2 - yz
  std::size_t conic_rank = 0;
  bool pass = false;
};

QuadricReport quadric_change_report();
bool quadric_change_check();

/// (A v1) (x) (eps1 A^-1) = [[xw, -xz], [yw, -yz]].
ExactMatrix tensor_orbit_matrix(const Sl2GroupElement& a);

/// Traceless part of the rank-one map v (x) eps: v eps - (eps(v)/2) I.
ExactMatrix moment_map(const std::vector<GaussianRational>& v, const std::vector<GaussianRational>& eps);

/// moment_map((x,y), (w,-z)) == A diag(1/2,-1/2) A^-1.
bool moment_orbit_check(const Sl2GroupElement& a);

/// The orbit point of A, ([x:y], [z:w]) in P^1 x P^1.
MultiProjPoint eigenline_point(const Sl2GroupElement& a);

/// Eigenlines (for +1 and -1) of a point of x^2 + yz = 1, as a point of
/// P^1 x P^1.
MultiProjPoint orbit_to_p1p1(const GaussianRational& x, const GaussianRational& y, const GaussianRational& z);

/// [xw + yz : xw - yz]. Throws PreconditionError("indeterminate point") on
/// the base locus.
MultiProjPoint rational_extension(const MultiProjPoint& pt);
bool in_base_locus(const MultiProjPoint& pt);
MultiProjPoint base_point(int which); // 1 or 2

/// Blocks [x,y; z,w; r,s].
VariableBlocks graph_blocks();
/// s(xw + yz) - r(xw - yz).
MultiHomPoly graph_surface();
SmoothnessReport graph_smooth_report();
bool graph_smooth_check();

/// graph_surface with ([x:y],[z:w]) fixed: a form in r, s. Zero over the
/// base points.
MultiHomPoly graph_fiber_over(const MultiProjPoint& pt);

/// (s0 - r0) xw + (s0 + r0) yz on P^1 x P^1. Throws PreconditionError for (0,0).
MultiHomPoly compactified_fiber(const GaussianRational& r0, const GaussianRational& s0);

/// det of [[c_xz, c_xw], [c_yz, c_yw]] for a bidegree (1,1) form.
GaussianRational bilinear_determinant(const MultiHomPoly& form);
bool is_singular_value(const GaussianRational& r0, const GaussianRational& s0);

struct CriticalData {
  std::vector<MultiProjPoint> values; // [r:s]
  std::vector<MultiProjPoint> points; // ([x:y],[z:w])
  bool verified = false;
};

/// Values [1:1], [1:-1] and points ([1:0],[0:1]), ([0:1],[1:0]), with each
/// point checked to lie on its fiber and to kill the fiber's gradient.
CriticalData critical_data();

struct ScanRow {
  GaussianRational r, s, det;
  bool singular = false;
};

/// The two special values plus n random integer values in [-9,9]^2.
std::vector<ScanRow> singular_value_scan(std::uint64_t seed, std::size_t n);

/// (x+1)^2 - yz - 1 under x -> x - 1, y -> -y is a unit times x^2 + yz - 1.
bool deformed_ring_iso_check();
bool deformed_ring_identity_control();

/// Every given sphere point maps to a pair of distinct eigenlines, hence off
/// the base locus.
bool sphere_avoids_base_locus(const std::vector<std::array<Rational, 3>>& sphere_points);

} // namespace lg2::compact

#endif
