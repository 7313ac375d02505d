#include <doctest.h>

#include <random>

#include "lg2/errors.hpp"
#include "lg2/compact.hpp"
#include "lg2/symplectic.hpp"

using namespace lg2::compact;
using GR = lg2::GaussianRational;

TEST_CASE("multiprojective points")
{
  const MultiProjPoint a({{1, 2}, {GR(0, 1), 3}});
  const MultiProjPoint b({{-2, -4}, {-1, GR(0, 3)}});
  CHECK(a == b);
  CHECK_FALSE(a == MultiProjPoint({{1, 2}, {1, 3}}));
  CHECK_THROWS_AS(MultiProjPoint({{0, 0}}), lg2::PreconditionError);
  CHECK(MultiProjPoint({{1, 0}, {0, 1}}).to_string() == "([1:0],[0:1])");
}

TEST_CASE("SL(2) elements")
{
  CHECK_THROWS_AS(Sl2GroupElement::make(1, 1, 1, 1), lg2::PreconditionError);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const auto a = random_sl2(rng);
    CHECK(a.x * a.w - a.y * a.z == GR(1));
  }
}

TEST_CASE("quadric change of coordinates")
{
  const auto r = quadric_change_report();
  CHECK(r.pass);
  REQUIRE(r.scalar);
  CHECK(*r.scalar == GR(1));
  CHECK(r.gram_rank == 4);
  CHECK(r.conic_rank == 3);
  CHECK(gram_matrix(r.homogenized).rank() == 4);
}

TEST_CASE("moment map and tensor matrix on random elements")
{
  std::mt19937_64 rng(5);
  const lg2::ExactMatrix half = lg2::ExactMatrix::diagonal({GR(lg2::Rational(1, 2)), GR(lg2::Rational(-1, 2))});
  for (int k = 0; k < 30; ++k) {
    const auto a = random_sl2(rng);
    const lg2::ExactMatrix m = a.matrix() * half * a.matrix().inverse();
    CHECK(moment_map({a.x, a.y}, {a.w, -a.z}) == m);
    CHECK(moment_orbit_check(a));
    const lg2::ExactMatrix t = tensor_orbit_matrix(a);
    CHECK(t * t == t);
    CHECK(t - m == GR(lg2::Rational(1, 2)) * lg2::ExactMatrix::identity(2));
  }
}

TEST_CASE("rational extension")
{
  // f_H = tr(H mu) = xw + yz on the orbit point of A
  std::mt19937_64 rng(9);
  for (int k = 0; k < 30; ++k) {
    const auto a = random_sl2(rng);
    CHECK(rational_extension(eigenline_point(a)) == MultiProjPoint({{a.x * a.w + a.y * a.z, 1}}));
  }
  CHECK(in_base_locus(base_point(1)));
  CHECK(in_base_locus(base_point(2)));
  CHECK_FALSE(in_base_locus(MultiProjPoint({{1, 0}, {0, 1}})));
  CHECK_THROWS_WITH_AS(rational_extension(base_point(1)), "indeterminate point", lg2::PreconditionError);
  CHECK_THROWS_AS(rational_extension(base_point(2)), lg2::PreconditionError);
  CHECK_THROWS_AS(base_point(3), lg2::PreconditionError);
}

TEST_CASE("orbit to P^1 x P^1")
{
  // x = 1, y = z = 0 is diag(1,-1): eigenlines e1 and e2
  CHECK(orbit_to_p1p1(1, 0, 0) == MultiProjPoint({{1, 0}, {0, 1}}));
  CHECK(rational_extension(orbit_to_p1p1(1, 0, 0)) == MultiProjPoint({{1, 1}}));
  CHECK(rational_extension(orbit_to_p1p1(-1, 0, 0)) == MultiProjPoint({{-1, 1}}));
}

TEST_CASE("graph surface")
{
  CHECK(graph_smooth_check());
  CHECK(graph_smooth_report().charts_checked == 8);
  CHECK(graph_fiber_over(base_point(1)).is_zero());
  CHECK(graph_fiber_over(base_point(2)).is_zero());
  CHECK_FALSE(graph_fiber_over(MultiProjPoint({{1, 1}, {1, 2}})).is_zero());
}

TEST_CASE("singular fibers")
{
  CHECK(is_singular_value(1, 1));
  CHECK(is_singular_value(1, -1));
  CHECK(is_singular_value(GR(0, 2), GR(0, 2)));
  CHECK_FALSE(is_singular_value(1, 0));
  CHECK_FALSE(is_singular_value(0, 1));
  CHECK_FALSE(is_singular_value(2, 1));
  CHECK_THROWS_AS(compactified_fiber(0, 0), lg2::PreconditionError);
  // xw - yz has determinant -1 in the (z,w) x (x,y) layout
  const auto f = compactified_fiber(0, 1);
  CHECK_FALSE(bilinear_determinant(f).is_zero());
  const auto d = critical_data();
  CHECK(d.verified);
  CHECK(d.values.size() == 2);
  for (const auto& row : singular_value_scan(1, 30))
    CHECK(row.singular == is_singular_value(row.r, row.s));
}

TEST_CASE("deformed ring and the thimble sphere")
{
  CHECK(deformed_ring_iso_check());
  CHECK_FALSE(deformed_ring_identity_control());
  CHECK(sphere_avoids_base_locus(lg2::symplectic::rational_sphere_points()));
}
