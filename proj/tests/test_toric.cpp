#include <doctest.h>

#include <algorithm>
#include <random>

#include "lg2/errors.hpp"
#include "lg2/toric.hpp"

using namespace lg2::toric;

namespace {

long h0_p1(long n) { return std::max(0L, n + 1); }
long h1_p1(long n) { return std::max(0L, -n - 1); }

// Kunneth on P^1 x P^1 = F_0 for O(pE + qF)
CohDims kunneth(int p, int q)
{
  return {h0_p1(p) * h0_p1(q), h0_p1(p) * h1_p1(q) + h1_p1(p) * h0_p1(q), h1_p1(p) * h1_p1(q)};
}

// p >= -1: the projection to P^1 pushes O(pE + qF) forward to
// O(q) + O(q-a) + ... + O(q-pa) with no higher direct image.
CohDims pushforward(int a, int p, int q)
{
  CohDims d;
  for (int k = 0; k <= p; ++k) {
    d.h0 += h0_p1(q - k * a);
    d.h1 += h1_p1(q - k * a);
  }
  return d;
}

CohDims dims(int a, int p, int q)
{
  const HirzebruchFan fan(a);
  return cohomology_dims(fan, pic_to_divisor(fan, {p, q}));
}

} // namespace

TEST_CASE("P^1 line bundle identity")
{
  for (long x = -50; x <= 50; ++x)
    CHECK(h0_p1(x) - h1_p1(x) == x + 1);
}

TEST_CASE("fan and divisor conventions")
{
  for (int a = 0; a <= 4; ++a) {
    const HirzebruchFan fan(a);
    CHECK(fan.smooth());
    const auto s = self_intersections_from_fan(fan);
    CHECK(s[3] == -a);
    CHECK(s[1] == a);
    CHECK(s[0] == 0);
    CHECK(s[2] == 0);
    CHECK(divisor_convention_consistent(fan));
    CHECK(divisor_class(fan, {0, 0, 0, 1}) == PicClass{1, 0});
    CHECK(divisor_class(fan, {0, 1, 0, 0}) == PicClass{1, a});
    CHECK(divisor_class(fan, {1, 0, 0, 0}) == PicClass{0, 1});
    CHECK(divisor_class(fan, {0, 0, 1, 0}) == PicClass{0, 1});
  }
  CHECK_THROWS_AS(HirzebruchFan(-1), lg2::PreconditionError);
}

TEST_CASE("F_2 values")
{
  CHECK(dims(2, 0, 0) == CohDims{1, 0, 0});
  CHECK(dims(2, 1, 0) == CohDims{1, 1, 0});
  CHECK(dims(2, -1, 0) == CohDims{0, 0, 0});
  CHECK(dims(2, 0, 1) == CohDims{2, 0, 0});
  const HirzebruchFan f2(2);
  CHECK(ext_dims(f2, {-1, 0}, {0, 0}) == CohDims{1, 1, 0});
  CHECK(ext_dims(f2, {0, 0}, {-1, 0}) == CohDims{0, 0, 0});
}

TEST_CASE("F_0 agrees with Kunneth")
{
  for (int p = -4; p <= 4; ++p)
    for (int q = -4; q <= 4; ++q)
      CHECK(dims(0, p, q) == kunneth(p, q));
}

TEST_CASE("F_a agrees with the pushforward to P^1")
{
  for (int a = 1; a <= 3; ++a)
    for (int p = -1; p <= 3; ++p)
      for (int q = -4; q <= 4; ++q)
        CHECK(dims(a, p, q) == pushforward(a, p, q));
}

TEST_CASE("Riemann-Roch on random classes")
{
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-6, 6), aa(0, 3);
  for (int k = 0; k < 60; ++k) {
    const int a = aa(rng), p = c(rng), q = c(rng);
    CHECK(dims(a, p, q).euler() == euler_rr({p, q}, a));
  }
}

TEST_CASE("Serre duality on random classes")
{
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> c(-4, 4), aa(0, 3);
  for (int k = 0; k < 40; ++k) {
    const int a = aa(rng), p = c(rng), q = c(rng);
    const PicClass kc = canonical_class(a);
    const CohDims d = dims(a, p, q), dual = dims(a, kc.p - p, kc.q - q);
    CHECK(d.h0 == dual.h2);
    CHECK(d.h1 == dual.h1);
    CHECK(d.h2 == dual.h0);
  }
}

TEST_CASE("box margin does not change the answer")
{
  const HirzebruchFan f2(2);
  for (int p = -3; p <= 3; ++p)
    for (int q = -3; q <= 3; ++q) {
      const auto d = pic_to_divisor(f2, {p, q});
      CHECK(cohomology_dims(f2, d, 0) == cohomology_dims(f2, d, 3));
    }
  CHECK_THROWS_AS(cohomology_dims(f2, {0, 0, 0, 0}, -1), lg2::PreconditionError);
}

TEST_CASE("intersection numbers")
{
  CHECK(intersection({1, 0}, {1, 0}, 2) == -2);
  CHECK(intersection({1, 0}, {0, 1}, 2) == 1);
  CHECK(intersection({0, 1}, {0, 1}, 2) == 0);
  // K^2 = 8 on every Hirzebruch surface
  for (int a = 0; a <= 5; ++a)
    CHECK(intersection(canonical_class(a), canonical_class(a), a) == 8);
}

TEST_CASE("the F_2 hypersurface in P^2 x P^1")
{
  CHECK(verify_f2_hypersurface());
  const auto b = p2_p1_blocks();
  const auto r = check_p2_p1_hypersurface(f2_equation());
  CHECK(r.charts_checked == 6);
  CHECK(r.failing_charts.empty());

  SUBCASE("reducible: x0 y0^2")
  {
    const auto m = check_p2_p1_hypersurface(lg2::MultiHomPoly::parse(b, "1*x0*y0^2"));
    CHECK_FALSE(m.irreducible);
    CHECK_FALSE(m.pass());
  }
  SUBCASE("common factor y0 + y1")
  {
    const auto m = check_p2_p1_hypersurface(lg2::MultiHomPoly::parse(b, "1*x0*y0^2 + 1*x0*y0*y1 + -1*x1*y0*y1 + -1*x1*y1^2"));
    CHECK_FALSE(m.irreducible);
  }
  SUBCASE("third coordinate keeps it irreducible")
  {
    const auto m = check_p2_p1_hypersurface(lg2::MultiHomPoly::parse(b, "1*x0*y0^2 + -1*x1*y1^2 + 1*x2*y0*y1"));
    CHECK(m.irreducible);
  }
  SUBCASE("wrong bidegree")
  {
    CHECK_THROWS_AS(irreducible_bidegree_1d(lg2::MultiHomPoly::parse(b, "1*x0^2*y0")), lg2::PreconditionError);
  }
}
