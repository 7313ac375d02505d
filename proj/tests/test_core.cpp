#include <doctest.h>

#include "lg2/chart_elimination.hpp"
#include "lg2/errors.hpp"
#include "lg2/exact_matrix.hpp"
#include "lg2/exact_sequence.hpp"
#include "lg2/poly.hpp"
#include "lg2/text_format.hpp"

using lg2::GaussianRational;
using lg2::MultiHomPoly;
using lg2::Rational;
using lg2::VariableBlocks;

TEST_CASE("gaussian rationals")
{
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  const GaussianRational a(Rational(1, 2), Rational(-3, 4));
  CHECK(a / a == GaussianRational(1));
  CHECK((a - a).is_zero());
  CHECK(GaussianRational::parse(a.to_string()) == a);
  CHECK(lg2::pow(GaussianRational(1, 1), 4) == GaussianRational(-4));
  CHECK_THROWS(GaussianRational(1) / GaussianRational(0));
}

TEST_CASE("polynomial arithmetic")
{
  const VariableBlocks b({{"x", "y", "z"}});
  const auto x = MultiHomPoly::variable(b, "x");
  const auto y = MultiHomPoly::variable(b, "y");
  const auto z = MultiHomPoly::variable(b, "z");
  const auto q = x * x + y * z;
  CHECK(q == MultiHomPoly::parse(b, q.to_string()));
  CHECK((x + y) * (x - y) == x * x - y * y);
  REQUIRE(q.multidegree());
  CHECK((*q.multidegree())[0] == 2);
  CHECK(lg2::derivative(q, "x") == GaussianRational(2) * x);
  CHECK(lg2::substitute(q, {{"x", y}}) == y * y + y * z);
  CHECK(lg2::eval(q, {{"x", 3}, {"y", 2}, {"z", -4}}) == GaussianRational(1));
  CHECK(lg2::proportional(GaussianRational(3) * q, q) == GaussianRational(3));
  CHECK(!lg2::proportional(q, x * x));
  CHECK_THROWS_AS(MultiHomPoly::parse(b, "1*w"), lg2::StructuralError);
  CHECK_THROWS_AS(MultiHomPoly::variable(b, "w"), lg2::StructuralError);
}

TEST_CASE("polynomial ring axioms on small samples")
{
  const VariableBlocks b({{"x", "y"}, {"s", "t"}});
  const std::vector<MultiHomPoly> ps{MultiHomPoly::parse(b, "1*x*s + -2*y*t"), MultiHomPoly::parse(b, "3*x^2"),
                                     MultiHomPoly::parse(b, "1*y + 1*t"), MultiHomPoly::constant(b, 5)};
  for (const auto& p : ps)
    for (const auto& q : ps) {
      CHECK(p * q == q * p);
      CHECK(p + q == q + p);
      for (const auto& r : ps)
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("exact matrices")
{
  const lg2::ExactMatrix m{{2, 1}, {1, 1}};
  CHECK(m * m.inverse() == lg2::ExactMatrix::identity(2));
  CHECK(m.rank() == 2);
  const lg2::ExactMatrix singular{{1, 2}, {2, 4}};
  CHECK(singular.rank() == 1);
  CHECK_THROWS(singular.inverse());
  const lg2::ExactMatrix e{{0, 1}, {0, 0}}, f{{0, 0}, {1, 0}};
  CHECK(lg2::commutator(e, f) == lg2::ExactMatrix::diagonal({1, -1}));
}

TEST_CASE("integer rank")
{
  CHECK(lg2::rank_over_rationals({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}) == 2);
  CHECK(lg2::rank_over_rationals({{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}) == 2);
  CHECK(lg2::rank_over_rationals({}) == 0);
}

TEST_CASE("smoothness certificates")
{
  const VariableBlocks b({{"x", "y", "z"}});
  SUBCASE("smooth conic")
  {
    const auto r = lg2::certify_hypersurface_smooth(MultiHomPoly::parse(b, "1*x*y + -1*z^2"));
    CHECK(r.smooth);
    CHECK(r.charts_checked == 3);
  }
  SUBCASE("line pair is singular")
  {
    const auto r = lg2::certify_hypersurface_smooth(MultiHomPoly::parse(b, "1*x*y"));
    CHECK_FALSE(r.smooth);
    CHECK_FALSE(r.failing_charts.empty());
  }
}

TEST_CASE("exact sequence bookkeeping")
{
  // 0 -> 1 -> 2 -> ? -> 0 forces the last dimension to 1
  const auto s = lg2::solve_exact_sequence({1, 2, std::nullopt});
  CHECK(s.dims == std::vector<long>{1, 2, 1});
  CHECK(s.ranks == std::vector<long>{1, 1});

  const auto t = lg2::solve_exact_sequence({1, 1, std::nullopt, 0}, {std::nullopt, 0, std::nullopt});
  CHECK(t.dims == std::vector<long>{1, 1, 0, 0});

  CHECK_THROWS_AS(lg2::solve_exact_sequence({1, 0}), lg2::DiagnosticError);
  CHECK_THROWS_AS(lg2::solve_exact_sequence({1, std::nullopt, std::nullopt, 1}), lg2::DiagnosticError);
}

TEST_CASE("text records")
{
  const auto recs = lg2::parse_records("# comment\nobject L0\n\n  generator x0 0 1 0\n");
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].keyword() == "object");
  CHECK(recs[1].integer(4) == 0);
  CHECK_THROWS(recs[0].expect_fields(3));
  CHECK_THROWS(recs[1].integer(1));
}
