#ifndef LG2_SYMPLECTIC_HPP
#define LG2_SYMPLECTIC_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "lg2/lie.hpp"
#include "lg2/rational.hpp"

namespace lg2::symplectic {

using Complex = std::complex<double>;
using lie::OrbitPointSL2;

/// Tangent vector (u1,u2,u3) at a point of x^2 + yz = 1, i.e. the
/// traceless matrix [[u1,u2],[u3,-u1]] with 2x u1 + z u2 + y u3 = 0.
class TangentVector {
public:
  /// Throws PreconditionError when the tangency residual exceeds tol
  /// (relative to |u|).
  TangentVector(OrbitPointSL2 base, std::array<Complex, 3> u, double tol = 1e-9);

  const OrbitPointSL2& base() const { return base_; }
  const std::array<Complex, 3>& components() const { return u_; }
  lie::ComplexMatrix matrix() const;
  double tangency_residual() const;
  /// Multiplication by i (the complex structure).
  TangentVector times_i() const;

private:
  OrbitPointSL2 base_;
  std::array<Complex, 3> u_;
};

/// Omega(u,v) = -Im tr(M_u M_v^dagger), the imaginary part of the Hermitian
/// form relative to su(2), with the sign fixed so Omega(u, iu) > 0.
/// Throws PreconditionError when the base points differ.
double omega(const TangentVector& u, const TangentVector& v);

using ExactTriple = std::array<GaussianRational, 3>;

/// Exact regime of omega on component triples (tangency not re-checked).
GaussianRational omega_exact(const ExactTriple& u, const ExactTriple& v);

/// Real 4-dimensional basis of the tangent space: two complex kernel
/// vectors of (2x, z, y) and their i-multiples.
std::array<TangentVector, 4> tangent_basis(const OrbitPointSL2& point);

/// The Hermitian point S = [[r, -p+iq], [-p-iq, -r]] of the sphere
/// p^2 + q^2 + r^2 = 1 inside the orbit.
OrbitPointSL2 sphere_point(double p, double q, double r);
std::array<GaussianRational, 3> sphere_point_exact(const Rational& p, const Rational& q, const Rational& r);

/// Basis i*sigma_z, i*sigma_y, i*sigma_x of su(2) as triples.
std::array<std::array<Complex, 3>, 3> su2_basis();

struct SphereReport {
  std::size_t samples = 0;
  double max_omega = 0.0;
  double max_tangency_residual = 0.0;
  double min_taming = 0.0;
  bool spans_dimension_two = true;
  bool pass = false;
};

/// Samples points of the sphere, forms tangents [S, A] for A in su(2) and
/// checks |Omega| < tol pairwise, real span of dimension 2, and the taming
/// Omega(u, iu) > 0 on the tangent basis at each sample.
SphereReport check_sphere_lagrangian(std::size_t n_samples, std::uint64_t seed, double tol = 1e-9);

struct ExactSphereReport {
  std::size_t samples = 0;
  bool all_zero = false;
  Rational max_abs_omega;
  bool spans_dimension_two = true;
};

/// Rational points of the sphere via inverse stereographic projection of
/// (a/d, b/d) for small integers; includes (3/5, 4/5, 0).
std::vector<std::array<Rational, 3>> rational_sphere_points(int max_numerator = 3);

ExactSphereReport check_sphere_lagrangian_exact(const std::vector<std::array<Rational, 3>>& points);

struct ThimbleSample {
  double lambda;
  double t;
  OrbitPointSL2 point;
};

/// alpha_lambda(t) = (lambda, e^{it} sqrt(1-lambda^2), e^{-it} sqrt(1-lambda^2)).
/// Throws PreconditionError for lambda outside [-1,1] or t outside [0, 2pi).
ThimbleSample thimble(double lambda, double t);

/// Analytic derivatives (d/dlambda, d/dt) of the thimble parametrization;
/// needs |lambda| < 1.
std::pair<std::array<Complex, 3>, std::array<Complex, 3>> thimble_derivatives(double lambda, double t);

/// Recovers (p,q,r) with sphere_point(p,q,r) == point when the point lies on
/// the real sphere; returns the residual of that reconstruction.
double sphere_membership_residual(const OrbitPointSL2& point);

/// Thimble over one matching path: s in [0,1] runs from the critical value
/// (+2 for Right, -2 for Left) to the regular value 0.
enum class MatchingPath { Left, Right };
ThimbleSample matching_path_thimble(MatchingPath path, double s, double t);

struct ThimbleReport {
  std::size_t samples = 0;
  double max_fiber_residual = 0.0;
  double max_omega = 0.0;
  double max_sphere_residual = 0.0;
  double max_glue_residual = 0.0;
  bool pass = false;
};

/// Default lambda grid {0, +-0.25, +-0.5, +-0.75, +-0.99}.
std::vector<double> default_thimble_lambdas();

ThimbleReport check_thimble_lagrangian(const std::vector<double>& lambdas, std::size_t t_samples,
                                       double tol = 1e-9);

/// g(y) = (y/|y|, ln|y|); throws PreconditionError for y = 0.
std::pair<Complex, double> fiber_to_cylinder(Complex y);
Complex cylinder_to_fiber(Complex unit, double s);

} // namespace lg2::symplectic

#endif
