#include <doctest.h>

#include "lg2/errors.hpp"
#include "lg2/fs_category.hpp"

using namespace lg2::fs;

namespace {

// A -> B with generators a (deg 0), b (deg 1), c (deg 2) and m1(a) = b,
// m1(b) = c: m1 o m1 != 0.
DirectedAInfCategory bad_differential()
{
  DirectedAInfCategory cat("bad");
  cat.add_object("A");
  cat.add_object("B");
  cat.add_generator("a", 0, 1, 0);
  cat.add_generator("b", 0, 1, 1);
  cat.add_generator("c", 0, 1, 2);
  cat.add_unit_products();
  cat.add_product({{"a"}, "b", 1});
  cat.add_product({{"b"}, "c", 1});
  return cat;
}

// A -> B -> C with f, g and a nonzero composite h = m2(f, g).
DirectedAInfCategory composable()
{
  DirectedAInfCategory cat("chain");
  cat.add_object("A");
  cat.add_object("B");
  cat.add_object("C");
  cat.add_generator("f", 0, 1, 0);
  cat.add_generator("g", 1, 2, 0);
  cat.add_generator("h", 0, 2, 0);
  cat.add_unit_products();
  cat.add_product({{"f", "g"}, "h", 1});
  return cat;
}

} // namespace

TEST_CASE("graded modules")
{
  GradedModule m;
  m.add("a", 0);
  m.add("b", 1);
  m.add("c", 1);
  CHECK(m.rank(1) == 2);
  CHECK(m.rank(5) == 0);
  CHECK(m.euler_characteristic() == -1);
  CHECK_THROWS_AS(m.add("a", 2), lg2::StructuralError);
}

TEST_CASE("the two-object category")
{
  const auto cat = lg2_category();
  CHECK(cat.objects().size() == 2);
  const auto h = cat.hom(0, 1);
  CHECK(h.rank(0) == 1);
  CHECK(h.rank(1) == 1);
  CHECK(cat.hom(1, 0).total_rank() == 0);
  CHECK(cat.hom(0, 0).total_rank() == 1);
  CHECK(check_a_infinity(cat, 6));
  CHECK(check_strict_unitality(cat));
  CHECK(degree_forced_vanishing(cat).empty());
}

TEST_CASE("A-infinity check catches a bad differential")
{
  const auto cat = bad_differential();
  CHECK_FALSE(check_a_infinity(cat, 3));
  const auto v = a_infinity_violation(cat, 3);
  REQUIRE(v);
  CHECK(*v == std::vector<std::string>{"a"});
}

TEST_CASE("associative composition passes, compositions are checked")
{
  const auto cat = composable();
  CHECK(check_a_infinity(cat, 5));
  CHECK(check_strict_unitality(cat));
  CHECK(cat.apply({"f", "g"}) == std::map<std::string, long>{{"h", 1}});
  CHECK(cat.apply({"id_A", "f"}) == std::map<std::string, long>{{"f", 1}});
  CHECK(check_a_infinity(lg2_category(), 2));
  CHECK_THROWS_AS(check_a_infinity(cat, 1), lg2::PreconditionError);
}

TEST_CASE("product entries are validated")
{
  auto cat = composable();
  CHECK_THROWS_AS(cat.add_product({{"g", "f"}, "h", 1}), lg2::StructuralError);
  CHECK_THROWS_AS(cat.add_product({{"f", "g"}, "f", 1}), lg2::StructuralError);
  CHECK_THROWS_AS(cat.add_product({{"f", "g"}, "h", 0}), lg2::StructuralError);
  CHECK_THROWS_AS(cat.add_product({{"f"}, "h", 1}), lg2::StructuralError);
  CHECK_THROWS_AS(cat.add_product({{"nope"}, "h", 1}), lg2::StructuralError);
  CHECK_THROWS_AS(cat.add_generator("back", 1, 0, 0), lg2::StructuralError);
}

TEST_CASE("degree-forced vanishing")
{
  auto cat = lg2_category();
  const auto without = degree_forced_vanishing(cat, 6, false);
  REQUIRE(without.size() == 1);
  CHECK(without[0] == VanishingCandidate{1, {"x0"}, 1});

  // a new generator drops the certification of m1
  cat.add_generator("x2", 0, 1, 2);
  CHECK_FALSE(cat.differential_certified());
  CHECK_FALSE(degree_forced_vanishing(cat).empty());
}

TEST_CASE("Morse model of the circle")
{
  const auto mc = morse_circle_complex();
  REQUIRE(mc.flow_lines.size() == 2);
  CHECK(mc.flow_lines[0].sign + mc.flow_lines[1].sign == 0);
  CHECK(mc.differential == std::vector<std::vector<long>>{{0}});
  CHECK(mc.cohomology.rank(0) == 1);
  CHECK(mc.cohomology.rank(1) == 1);
  const auto co = morse_circle_complex(MorseGrading::CoIndex);
  CHECK(co.cohomology.rank(0) == 1);
  CHECK(co.cohomology.rank(1) == 1);
}

TEST_CASE("text format round trip")
{
  for (const auto& cat : {lg2_category(), composable(), bad_differential()}) {
    const std::string text = cat.to_text();
    const auto back = DirectedAInfCategory::from_text(text);
    CHECK(back == cat);
    CHECK(back.to_text() == text);
  }
  CHECK_THROWS_AS(DirectedAInfCategory::from_text("category c\nobject A\nproduct x -> y 1\n"), lg2::StructuralError);
  CHECK_THROWS_AS(DirectedAInfCategory::from_text("bogus\n"), lg2::StructuralError);
}

TEST_CASE("hom tables")
{
  const HomTable t = hom_table(lg2_category());
  CHECK(t.to_string() == "[[1, (1,1)],[0, 1]]");
  CHECK(p1_mirror_table().to_string() == "[[1, 2],[0, 1]]");
  CHECK_FALSE(tables_equal(t, p1_mirror_table(), 3));

  // Hom(X0[s0], X1[s1])^d = Hom^(d + s1 - s0)
  const HomTable s = t.shifted({0, 1});
  CHECK(s.at(0, 1) == std::map<int, std::size_t>{{-1, 1}, {0, 1}});
  CHECK(tables_equal(t, s, 1));
  CHECK_FALSE(tables_equal(t, s, 0));
  CHECK(t.same_ranks(t.shifted({2, 2})));
}
