#include <doctest.h>

#include <algorithm>

#include "lg2/errors.hpp"
#include "lg2/mirror.hpp"

using namespace lg2::mirror;

namespace {

long h0_p1(long n) { return std::max(0L, n + 1); }

// Hom(O(a), O(b)) = H^0(O(b-a)); Ext^1 by Serre duality is Hom(O(b), O(a-2))
ExtDims line_bundle_oracle(int a, int b)
{
  return {h0_p1(b - a), h0_p1(a - 2 - b)};
}

} // namespace

TEST_CASE("Ext between line bundles")
{
  for (int a = -8; a <= 8; ++a)
    for (int b = -8; b <= 8; ++b)
      CHECK(ext_p1(SimpleP1Object::line_bundle(a), SimpleP1Object::line_bundle(b)) == line_bundle_oracle(a, b));
}

TEST_CASE("Ext with skyscrapers")
{
  const auto p = SimpleP1Object::skyscraper('p');
  const auto q = SimpleP1Object::skyscraper('q');
  CHECK(ext_p1(p, p) == ExtDims{1, 1});
  CHECK(ext_p1(p, q) == ExtDims{0, 0});
  for (int t = -3; t <= 3; ++t) {
    CHECK(ext_p1(SimpleP1Object::line_bundle(t), p) == ExtDims{1, 0});
    CHECK(ext_p1(p, SimpleP1Object::line_bundle(t)) == ExtDims{0, 1});
  }
  CHECK_THROWS_AS(SimpleP1Object::skyscraper('r'), lg2::PreconditionError);
}

TEST_CASE("shifted patterns")
{
  const auto o = SimpleP1Object::line_bundle(0), o1 = SimpleP1Object::line_bundle(1);
  CHECK(shifted_pattern(o, o1, 0, 0) == ExtPattern{{0, 2}});
  CHECK(shifted_pattern(o, o1, 0, 1) == ExtPattern{{1, 2}});
  CHECK(shifted_pattern(o, o1, 1, 0) == ExtPattern{{-1, 2}});
  CHECK(pattern_to_string({{0, 1}, {1, 1}}) == "{0:1, 1:1}");
  CHECK(shifted_pattern(o1, o, 0, 0).empty());
}

TEST_CASE("search")
{
  CHECK_FALSE(search_mirror_pair(10, 3));
  CHECK_FALSE(search_mirror_pair(20, 5));

  SearchOptions p1;
  p1.target = {{0, 2}};
  const auto w = search_mirror_pair(10, 3, p1);
  REQUIRE(w);
  CHECK(w->first == SimpleP1Object::line_bundle(0));
  CHECK(w->second == SimpleP1Object::line_bundle(1));
  CHECK(w->shift_first == 0);
  CHECK(w->shift_second == 0);

  SearchOptions relaxed;
  relaxed.require_simple_end = false;
  relaxed.require_directed = false;
  relaxed.allow_self_pairs = true;
  const auto s = search_mirror_pair(10, 3, relaxed);
  REQUIRE(s);
  CHECK(s->first == SimpleP1Object::skyscraper('p'));
  CHECK(s->second == SimpleP1Object::skyscraper('p'));
}

TEST_CASE("exclusion table")
{
  const auto rows = exclusion_table(10);
  CHECK(rows.size() == 5);
  for (const auto& r : rows) {
    CHECK(r.verified);
    CHECK(r.pairs_checked > 0);
  }
}

TEST_CASE("dimension bound")
{
  CHECK(dimension_bound_verdict(1, 2) == DimensionVerdict::Admissible);
  CHECK(dimension_bound_verdict(2, 2) == DimensionVerdict::Excluded);
  CHECK(dimension_bound_verdict(2, 3) == DimensionVerdict::Admissible);
  CHECK_THROWS_AS(dimension_bound_verdict(-1, 2), lg2::PreconditionError);
  CHECK_THROWS_AS(dimension_bound_verdict(1, 0), lg2::PreconditionError);
}
