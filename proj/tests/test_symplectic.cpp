#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lg2/errors.hpp"
#include "lg2/symplectic.hpp"

using namespace lg2::symplectic;
using lg2::GaussianRational;
using lg2::Rational;

namespace {

// -Im tr(M_u M_v^dagger) computed from the matrices directly
double omega_oracle(const TangentVector& u, const TangentVector& v)
{
  return -(u.matrix() * v.matrix().adjoint()).trace().imag();
}

} // namespace

TEST_CASE("omega is antisymmetric and tames the complex structure")
{
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const Complex y(d(rng), d(rng)), z(d(rng), d(rng));
    const Complex x = std::sqrt(1.0 - y * z);
    const auto basis = tangent_basis({x, y, z});
    for (const auto& u : basis) {
      CHECK(omega(u, u.times_i()) > 0.0);
      for (const auto& v : basis) {
        CHECK(omega(u, v) == doctest::Approx(-omega(v, u)).epsilon(1e-12));
        CHECK(omega(u, v) == doctest::Approx(omega_oracle(u, v)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("tangent vectors must be tangent")
{
  const OrbitPointSL2 p{1.0, 0.0, 0.0};
  CHECK_NOTHROW(TangentVector(p, {0.0, 1.0, 0.0}));
  CHECK_THROWS_AS(TangentVector(p, {1.0, 0.0, 0.0}), lg2::PreconditionError);
  const OrbitPointSL2 q{0.0, 1.0, 1.0};
  CHECK_THROWS_AS(omega(TangentVector(p, {0.0, 1.0, 0.0}), TangentVector(q, {1.0, 0.0, 0.0})),
                  lg2::PreconditionError);
}

TEST_CASE("sphere points lie on the orbit")
{
  for (const auto& [p, q, r] : rational_sphere_points()) {
    CHECK(p * p + q * q + r * r == 1);
    const auto s = sphere_point_exact(p, q, r);
    CHECK(s[0] * s[0] + s[1] * s[2] == GaussianRational(1));
  }
  const auto pt = sphere_point(0.6, 0.0, 0.8);
  CHECK(pt.orbit_residual() < 1e-15);
  CHECK(sphere_membership_residual(pt) < 1e-15);
}

TEST_CASE("tangent of a curve on the sphere is isotropic against su(2) tangents")
{
  const auto s = sphere_point_exact(0, 0, 1);
  // [S, i sigma_x] and [S, i sigma_y] with S = diag(1, -1)
  const std::array<GaussianRational, 3> u{0, GaussianRational(0, 2), GaussianRational(0, -2)};
  const std::array<GaussianRational, 3> v{0, GaussianRational(2), GaussianRational(2)};
  CHECK(s[0] == GaussianRational(1));
  CHECK(omega_exact(u, v) == GaussianRational(0));
  const std::array<GaussianRational, 3> iu{0, GaussianRational(-2), GaussianRational(2)};
  CHECK(omega_exact(u, iu) == GaussianRational(8));
}

TEST_CASE("sphere check")
{
  const auto r = check_sphere_lagrangian(1000, 1);
  CHECK(r.pass);
  CHECK(r.samples == 1000);
  CHECK(r.max_omega < 1e-9);
  const auto e = check_sphere_lagrangian_exact(rational_sphere_points());
  CHECK(e.all_zero);
  CHECK(e.max_abs_omega == 0);
}

TEST_CASE("thimble circles")
{
  for (double lambda : default_thimble_lambdas())
    for (int k = 0; k < 16; ++k) {
      const double t = 2.0 * std::numbers::pi * k / 16.0;
      const auto s = thimble(lambda, t);
      CHECK(s.point.orbit_residual() < 1e-12);
      // f_H = 2x is constant on the circle
      CHECK(std::abs(s.point.x - Complex(lambda, 0.0)) < 1e-15);
      const auto [dl, dt] = thimble_derivatives(lambda, t);
      const TangentVector a(s.point, dl), b(s.point, dt);
      CHECK(std::abs(omega(a, b)) < 1e-12);
    }
  CHECK_THROWS_AS(thimble(1.5, 0.0), lg2::PreconditionError);
  const auto r = check_thimble_lagrangian(default_thimble_lambdas(), 64);
  CHECK(r.pass);
  CHECK(r.samples == 9 * 64);
}

TEST_CASE("matching path endpoints")
{
  const auto right0 = matching_path_thimble(MatchingPath::Right, 0.0, 0.0);
  const auto left0 = matching_path_thimble(MatchingPath::Left, 0.0, 0.0);
  CHECK(std::abs(2.0 * right0.point.x - Complex(2.0, 0.0)) < 1e-15);
  CHECK(std::abs(2.0 * left0.point.x - Complex(-2.0, 0.0)) < 1e-15);
  for (int k = 0; k < 8; ++k) {
    const double t = k * 0.7;
    const auto a = matching_path_thimble(MatchingPath::Right, 1.0, t);
    const auto b = matching_path_thimble(MatchingPath::Left, 1.0, t);
    CHECK(std::abs(a.point.y - b.point.y) == 0.0);
    CHECK(std::abs(a.point.z - b.point.z) == 0.0);
  }
}

TEST_CASE("fiber to cylinder")
{
  CHECK_THROWS_AS(fiber_to_cylinder(0.0), lg2::PreconditionError);
  const auto [u, s] = fiber_to_cylinder(Complex(0.0, -std::exp(2.0)));
  CHECK(std::abs(u - Complex(0.0, -1.0)) < 1e-15);
  CHECK(s == doctest::Approx(2.0));
}
