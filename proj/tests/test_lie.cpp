#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lg2/errors.hpp"
#include "lg2/lie.hpp"

using namespace lg2::lie;

namespace {

// distinct permutations of a multiset, by brute force
std::size_t distinct_permutations(std::vector<double> v)
{
  std::sort(v.begin(), v.end());
  std::size_t n = 0;
  do
    ++n;
  while (std::next_permutation(v.begin(), v.end()));
  return n;
}

} // namespace

TEST_CASE("sl2 critical points and heights")
{
  const CartanDiagonal h({1, -1});
  auto pts = critical_points(h, h);
  std::sort(pts.begin(), pts.end());
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == std::vector<double>{-1, 1});
  CHECK(pts[1] == std::vector<double>{1, -1});
  const lg2::ExactMatrix hh = lg2::ExactMatrix::diagonal({1, -1});
  CHECK(height(hh, sl2_matrix(1, 0, 0)) == lg2::GaussianRational(2));
  CHECK(height(hh, sl2_matrix(-1, 0, 0)) == lg2::GaussianRational(-2));
}

TEST_CASE("sl2 Hessian matches the graph chart")
{
  // near x = 1, f = 2x = 2 sqrt(1 - yz) = 2 - yz + ..., Hessian [[0,-1],[-1,0]]
  const CartanDiagonal h({1, -1});
  const auto r = hessian_at_critical_point(h, h, {1, -1});
  CHECK(r.nondegenerate);
  CHECK(std::abs(r.determinant - std::complex<double>(-1, 0)) < 1e-4);
  const auto s = hessian_at_critical_point(h, h, {-1, 1});
  CHECK(std::abs(s.determinant - std::complex<double>(-1, 0)) < 1e-4);
}

TEST_CASE("critical count against brute-force permutations")
{
  const std::vector<std::vector<double>> h0s{{1, 0, -1}, {1, 1, -2}, {1, 1, -1, -1}, {3, -1, -1, -1}, {2, 1, -1, -2}};
  for (const auto& e : h0s) {
    std::vector<double> hv(e.size());
    std::iota(hv.begin(), hv.end(), 0.0);
    const double mean = std::accumulate(hv.begin(), hv.end(), 0.0) / static_cast<double>(hv.size());
    for (double& v : hv)
      v -= mean;
    const CartanDiagonal h0(e), h(hv);
    CHECK(critical_count(h0, h) == distinct_permutations(e));
    CHECK(critical_points(h0, h).size() == distinct_permutations(e));
  }
}

TEST_CASE("preconditions")
{
  CHECK_THROWS_AS(CartanDiagonal({1, 1}), lg2::PreconditionError);
  const CartanDiagonal h0({1, 0, -1}), singular({1, 1, -2});
  CHECK_THROWS_AS(critical_points(h0, singular), lg2::PreconditionError);
  CHECK_THROWS_AS(critical_points(h0, CartanDiagonal({1, -1})), lg2::PreconditionError);
}

TEST_CASE("sl3 Hessians are nondegenerate at every critical point")
{
  const CartanDiagonal h0({1, 0, -1}), h({2, 1, -3});
  for (const auto& p : critical_points(h0, h))
    CHECK(hessian_nondegenerate(h0, h, p));
}

TEST_CASE("orbit membership")
{
  const CartanDiagonal h0({1, -1});
  ComplexMatrix g(2, 2);
  g << 1.0, 2.0, 1.0, 3.0;
  CHECK(orbit_contains(h0, g * diagonal_matrix({1, -1}) * g.inverse()));
  CHECK_FALSE(orbit_contains(h0, g * diagonal_matrix({2, -2}) * g.inverse()));
  // [[x,y],[z,-x]] with x^2 + yz = 1
  CHECK(orbit_contains(std::vector<lg2::Rational>{1, -1}, sl2_matrix(3, 2, -4)));
  CHECK_FALSE(orbit_contains(std::vector<lg2::Rational>{1, -1}, sl2_matrix(3, 2, -3)));
  CHECK(orbit_contains(std::vector<lg2::Rational>{1, -1}, sl2_matrix(0, lg2::GaussianRational::i(), -lg2::GaussianRational::i())));
}

TEST_CASE("trace form")
{
  const lg2::ExactMatrix a = sl2_matrix(1, 2, 3), b = sl2_matrix(0, 1, 0);
  CHECK(trace_form(a, b) == lg2::GaussianRational(3));
  CHECK(trace_form(a, a) == lg2::GaussianRational(2 * (1 + 6)));
}
