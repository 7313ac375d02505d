#include "lg2/mirror.hpp"

#include <algorithm>
#include <sstream>

#include "lg2/errors.hpp"

namespace lg2::mirror {

SimpleP1Object SimpleP1Object::skyscraper(char point)
{
  if (point != 'p' && point != 'q')
    throw PreconditionError("skyscraper points are 'p' or 'q'");
  return {Kind::Skyscraper, 0, point};
}

bool SimpleP1Object::operator==(const SimpleP1Object& o) const
{
  if (kind != o.kind)
    return false;
  return kind == Kind::LineBundle ? t == o.t : point == o.point;
}

std::string SimpleP1Object::to_string() const
{
  if (kind == Kind::Skyscraper)
    return std::string("O_") + point;
  return t == 0 ? "O" : "O(" + std::to_string(t) + ")";
}

ExtDims ext_p1(const SimpleP1Object& x, const SimpleP1Object& y)
{
  using K = SimpleP1Object::Kind;
  if (x.kind == K::LineBundle && y.kind == K::LineBundle) {
    const long d = static_cast<long>(y.t) - x.t;
    return {std::max(0L, d + 1), std::max(0L, -d - 1)};
  }
  if (x.kind == K::LineBundle)
    return {1, 0};
  if (y.kind == K::LineBundle)
    return {0, 1};
  return x.point == y.point ? ExtDims{1, 1} : ExtDims{0, 0};
}

ExtPattern shifted_pattern(const SimpleP1Object& x, const SimpleP1Object& y, int shift_x, int shift_y)
{
  const ExtDims e = ext_p1(x, y);
  const int offset = shift_y - shift_x;
  ExtPattern p;
  if (e.hom)
    p[offset] = e.hom;
  if (e.ext1)
    p[1 + offset] = e.ext1;
  return p;
}

std::string pattern_to_string(const ExtPattern& p)
{
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [d, n] : p) {
    out << (first ? "" : ", ") << d << ":" << n;
    first = false;
  }
  out << "}";
  return out.str();
}

namespace {

std::vector<int> zigzag(int range)
{
  std::vector<int> out{0};
  for (int k = 1; k <= range; ++k) {
    out.push_back(-k);
    out.push_back(k);
  }
  return out;
}

std::vector<SimpleP1Object> candidates(int t_range)
{
  std::vector<SimpleP1Object> out;
  for (int t : zigzag(t_range))
    out.push_back(SimpleP1Object::line_bundle(t));
  out.push_back(SimpleP1Object::skyscraper('p'));
  out.push_back(SimpleP1Object::skyscraper('q'));
  return out;
}

bool simple_end(const SimpleP1Object& x)
{
  return shifted_pattern(x, x, 0, 0) == ExtPattern{{0, 1}};
}

} // namespace

std::optional<MirrorWitness> search_mirror_pair(int t_range, int shift_range, const SearchOptions& options)
{
  if (t_range < 0 || shift_range < 0)
    throw PreconditionError("search ranges must be nonnegative");
  const auto objects = candidates(t_range);
  const auto shifts = zigzag(shift_range);
  for (const auto& f0 : objects) {
    if (options.require_simple_end && !simple_end(f0))
      continue;
    for (const auto& f1 : objects) {
      if (!options.allow_self_pairs && f0 == f1)
        continue;
      if (options.require_simple_end && !simple_end(f1))
        continue;
      for (int i : shifts)
        for (int j : shifts) {
          if (shifted_pattern(f0, f1, i, j) != options.target)
            continue;
          if (options.require_directed && !shifted_pattern(f1, f0, j, i).empty())
            continue;
          return MirrorWitness{f0, f1, i, j};
        }
    }
  }
  return std::nullopt;
}

std::vector<ExclusionRow> exclusion_table(int t_range)
{
  using K = SimpleP1Object::Kind;
  const auto objects = candidates(t_range);
  ExclusionRow lb_lb{"line bundle, line bundle", "Hom and Ext^1 never both nonzero; the pattern sits in one degree"};
  ExclusionRow lb_sky{"line bundle, skyscraper", "pattern {0:1}: a single degree"};
  ExclusionRow sky_lb{"skyscraper, line bundle", "pattern {1:1}: a single degree; End(O_p) is not {0:1}"};
  ExclusionRow same_sky{"skyscraper, same skyscraper", "End(O_p) = {0:1, 1:1} is not simple and the two objects coincide"};
  ExclusionRow diff_sky{"skyscraper, other skyscraper", "Ext^*(O_p, O_q) = 0 in every degree"};
  for (auto* row : {&lb_lb, &lb_sky, &sky_lb, &same_sky, &diff_sky})
    row->verified = true;
  for (const auto& x : objects)
    for (const auto& y : objects) {
      const ExtDims e = ext_p1(x, y);
      if (x.kind == K::LineBundle && y.kind == K::LineBundle) {
        ++lb_lb.pairs_checked;
        lb_lb.verified = lb_lb.verified && (e.hom == 0 || e.ext1 == 0);
      } else if (x.kind == K::LineBundle) {
        ++lb_sky.pairs_checked;
        lb_sky.verified = lb_sky.verified && e == ExtDims{1, 0};
      } else if (y.kind == K::LineBundle) {
        ++sky_lb.pairs_checked;
        sky_lb.verified = sky_lb.verified && e == ExtDims{0, 1} && !simple_end(x);
      } else if (x == y) {
        ++same_sky.pairs_checked;
        same_sky.verified = same_sky.verified && e == ExtDims{1, 1};
      } else {
        ++diff_sky.pairs_checked;
        diff_sky.verified = diff_sky.verified && e == ExtDims{0, 0};
      }
    }
  return {lb_lb, lb_sky, sky_lb, same_sky, diff_sky};
}

DimensionVerdict dimension_bound_verdict(int n, int m)
{
  if (n < 0 || m < 1)
    throw PreconditionError("dimension bound needs n >= 0 and m >= 1");
  return n + 1 > m ? DimensionVerdict::Excluded : DimensionVerdict::Admissible;
}

} // namespace lg2::mirror
