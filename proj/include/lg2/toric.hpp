#ifndef LG2_TORIC_HPP
#define LG2_TORIC_HPP

#include <array>
#include <string>
#include <vector>

#include "lg2/poly.hpp"

namespace lg2::toric {

using Ray = std::array<int, 2>;

/// Fan of the Hirzebruch surface F_a with rays u1 = (1,0), u2 = (0,1),
/// u3 = (-1,-a), u4 = (0,-1) and maximal cones <u_i, u_{i+1}>.
///
/// With this u3, D_{u4} is the negative section E (self-intersection -a),
/// D_{u2} ~ E + aF and D_{u1} ~ D_{u3} ~ F. Putting u3 = (-1,a) instead
/// swaps the roles of D_{u2} and D_{u4}.
class HirzebruchFan {
public:
  /// Throws PreconditionError for a < 0.
  explicit HirzebruchFan(int a);

  int a() const { return a_; }
  const std::array<Ray, 4>& rays() const { return rays_; }
  /// Cone i is spanned by rays i and i+1 (mod 4).
  std::array<std::size_t, 2> cone(std::size_t i) const { return {i, (i + 1) % 4}; }
  bool smooth() const;

private:
  int a_;
  std::array<Ray, 4> rays_;
};

struct PicClass {
  int p = 0; // coefficient of E
  int q = 0; // coefficient of F

  PicClass operator-(const PicClass& o) const { return {p - o.p, q - o.q}; }
  PicClass operator+(const PicClass& o) const { return {p + o.p, q + o.q}; }
  bool operator==(const PicClass& o) const = default;
};

using ToricDivisor = std::array<int, 4>;

struct CohDims {
  long h0 = 0, h1 = 0, h2 = 0;

  long euler() const { return h0 - h1 + h2; }
  bool operator==(const CohDims& o) const = default;
  std::string to_string() const;
};

/// p*D_{u4} + q*D_{u1}.
ToricDivisor pic_to_divisor(const HirzebruchFan& fan, const PicClass& c);

/// Class of a torus-invariant divisor, read off from the linear
/// equivalences D1 ~ D3 and D2 ~ D4 + a*D3.
PicClass divisor_class(const HirzebruchFan& fan, const ToricDivisor& d);

/// Self-intersections D_i^2 from the fan: u_{i-1} + u_{i+1} = -(D_i^2) u_i.
std::array<int, 4> self_intersections_from_fan(const HirzebruchFan& fan);

/// Checks the fixed divisor convention against the fan: D4^2 = -a,
/// D4.D1 = 1, D1^2 = 0, and D2 ~ E + aF with D2^2 = a.
bool divisor_convention_consistent(const HirzebruchFan& fan);

/// Sum over characters m in [-M,M]^2, M = (a+1) sum|a_rho| + 1 + box_margin, of
/// the Cech cohomology of the four-chart cover in degree m. The result is
/// recomputed at box_margin + 2; a difference throws DiagnosticError.
/// Throws PreconditionError for box_margin < 0.
CohDims cohomology_dims(const HirzebruchFan& fan, const ToricDivisor& d, int box_margin = 0);

/// Ext^k(L1, L2) = H^k(L2 - L1).
CohDims ext_dims(const HirzebruchFan& fan, const PicClass& c1, const PicClass& c2, int box_margin = 0);

/// E^2 = -a, E.F = 1, F^2 = 0.
long intersection(const PicClass& c1, const PicClass& c2, int a);

/// K = -2E - (a+2)F.
PicClass canonical_class(int a);

/// chi = 1 + c.(c - K) / 2.
long euler_rr(const PicClass& c, int a);

struct HypersurfaceReport {
  bool irreducible = false;
  bool bidegree_ok = false;
  bool smooth = false;
  std::size_t charts_checked = 0;
  std::vector<std::string> failing_charts;

  bool pass() const { return irreducible && bidegree_ok && smooth; }
};

/// Blocks [x0,x1,x2; y0,y1] for P^2 x P^1.
VariableBlocks p2_p1_blocks();

/// x0*y0^2 - x1*y1^2.
MultiHomPoly f2_equation();

/// A form of bidegree (1,d) in (x; y0,y1), written x0*A + x1*B + ..., is
/// irreducible iff the binary forms A, B, ... have no common factor.
/// Throws PreconditionError unless f has bidegree (1,d) over two blocks with
/// a binary second block.
bool irreducible_bidegree_1d(const MultiHomPoly& f);

/// Bidegree (1,2), irreducibility and chart-wise smoothness of {f = 0}.
HypersurfaceReport check_p2_p1_hypersurface(const MultiHomPoly& f);

bool verify_f2_hypersurface();

} // namespace lg2::toric

#endif
