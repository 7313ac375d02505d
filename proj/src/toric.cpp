#include "lg2/toric.hpp"

#include <cstdlib>
#include <sstream>

#include "lg2/chart_elimination.hpp"
#include "lg2/errors.hpp"
#include "lg2/exact_matrix.hpp"

namespace lg2::toric {

HirzebruchFan::HirzebruchFan(int a) : a_(a)
{
  if (a < 0)
    throw PreconditionError("Hirzebruch parameter must be nonnegative");
  rays_ = {Ray{1, 0}, Ray{0, 1}, Ray{-1, -a}, Ray{0, -1}};
}

bool HirzebruchFan::smooth() const
{
  for (std::size_t i = 0; i < 4; ++i) {
    const Ray& u = rays_[i];
    const Ray& v = rays_[(i + 1) % 4];
    if (std::abs(u[0] * v[1] - u[1] * v[0]) != 1)
      return false;
  }
  return true;
}

std::string CohDims::to_string() const
{
  std::ostringstream out;
  out << "(" << h0 << "," << h1 << "," << h2 << ")";
  return out.str();
}

ToricDivisor pic_to_divisor(const HirzebruchFan&, const PicClass& c)
{
  return {c.q, 0, 0, c.p};
}

PicClass divisor_class(const HirzebruchFan& fan, const ToricDivisor& d)
{
  return {d[1] + d[3], d[0] + fan.a() * d[1] + d[2]};
}

std::array<int, 4> self_intersections_from_fan(const HirzebruchFan& fan)
{
  std::array<int, 4> out{};
  const auto& u = fan.rays();
  for (std::size_t i = 0; i < 4; ++i) {
    const Ray& prev = u[(i + 3) % 4];
    const Ray& next = u[(i + 1) % 4];
    const Ray sum{prev[0] + next[0], prev[1] + next[1]};
    // sum = c * u_i with u_i primitive
    const Ray& ui = u[i];
    int c = ui[0] != 0 ? sum[0] / ui[0] : sum[1] / ui[1];
    if (sum[0] != c * ui[0] || sum[1] != c * ui[1])
      throw DiagnosticError("fan is not a smooth complete surface fan");
    out[i] = -c;
  }
  return out;
}

long intersection(const PicClass& c1, const PicClass& c2, int a)
{
  return -static_cast<long>(a) * c1.p * c2.p + static_cast<long>(c1.p) * c2.q + static_cast<long>(c1.q) * c2.p;
}

bool divisor_convention_consistent(const HirzebruchFan& fan)
{
  const int a = fan.a();
  const auto self = self_intersections_from_fan(fan);
  const PicClass e = divisor_class(fan, {0, 0, 0, 1});
  const PicClass f = divisor_class(fan, {1, 0, 0, 0});
  const PicClass d2 = divisor_class(fan, {0, 1, 0, 0});
  const PicClass d3 = divisor_class(fan, {0, 0, 1, 0});
  return e == PicClass{1, 0} && f == PicClass{0, 1} && d3 == f && d2 == PicClass{1, a} && self[3] == -a &&
         self[1] == a && self[0] == 0 && self[2] == 0 && intersection(e, e, a) == self[3] &&
         intersection(d2, d2, a) == self[1] && intersection(f, f, a) == 0 && intersection(e, f, a) == 1 &&
         intersection(e, d2, a) == 0;
}

PicClass canonical_class(int a)
{
  return {-2, -(a + 2)};
}

long euler_rr(const PicClass& c, int a)
{
  const PicClass k = canonical_class(a);
  const long twice = intersection(c, c - k, a);
  return 1 + twice / 2;
}

namespace {

// Cech cohomology of the cover by the four affine charts in one character
// degree. Subsets of charts are bitmasks; the intersection of charts is the
// chart of the common face, whose rays are the rays shared by all of them.
std::array<long, 4> character_cohomology(const HirzebruchFan& fan, const ToricDivisor& d, int m0, int m1)
{
  std::array<bool, 4> ray_ok{};
  for (std::size_t r = 0; r < 4; ++r) {
    const Ray& u = fan.rays()[r];
    ray_ok[r] = m0 * u[0] + m1 * u[1] >= -d[r];
  }
  std::array<std::vector<unsigned>, 4> included; // by simplex dimension
  for (unsigned mask = 1; mask < 16; ++mask) {
    unsigned rays = 0xF;
    for (std::size_t i = 0; i < 4; ++i)
      if (mask & (1u << i)) {
        const auto c = fan.cone(i);
        rays &= (1u << c[0]) | (1u << c[1]);
      }
    bool ok = true;
    for (std::size_t r = 0; r < 4; ++r)
      if ((rays & (1u << r)) && !ray_ok[r])
        ok = false;
    if (ok)
      included[static_cast<std::size_t>(__builtin_popcount(mask) - 1)].push_back(mask);
  }
  std::array<std::size_t, 4> rank_d{}; // rank of d^p : C^p -> C^{p+1}
  for (std::size_t p = 0; p + 1 < 4; ++p) {
    const auto& cols = included[p];
    const auto& rows = included[p + 1];
    if (cols.empty() || rows.empty())
      continue;
    IntMatrix m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const unsigned t = rows[r];
      int position = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        if (!(t & (1u << i)))
          continue;
        const unsigned s = t & ~(1u << i);
        for (std::size_t c = 0; c < cols.size(); ++c)
          if (cols[c] == s)
            m[r][c] = (position % 2 == 0) ? 1 : -1;
        ++position;
      }
    }
    rank_d[p] = rank_over_rationals(m);
  }
  std::array<long, 4> h{};
  for (std::size_t p = 0; p < 4; ++p) {
    long v = static_cast<long>(included[p].size()) - static_cast<long>(rank_d[p]);
    if (p > 0)
      v -= static_cast<long>(rank_d[p - 1]);
    h[p] = v;
  }
  return h;
}

CohDims box_sum(const HirzebruchFan& fan, const ToricDivisor& d, int half_width)
{
  std::array<long, 4> total{};
  for (int m0 = -half_width; m0 <= half_width; ++m0)
    for (int m1 = -half_width; m1 <= half_width; ++m1) {
      const auto h = character_cohomology(fan, d, m0, m1);
      for (std::size_t p = 0; p < 4; ++p)
        total[p] += h[p];
    }
  if (total[3] != 0)
    throw DiagnosticError("nonzero Cech H^3 on a surface");
  return {total[0], total[1], total[2]};
}

} // namespace

CohDims cohomology_dims(const HirzebruchFan& fan, const ToricDivisor& d, int box_margin)
{
  if (box_margin < 0)
    throw PreconditionError("box margin must be nonnegative");
  // Vertices of the line arrangement <m, u_r> = -d_r have |m_i| <= (a+1) sum |d_r|.
  int sum = 0;
  for (int c : d)
    sum += std::abs(c);
  const int base = (std::abs(fan.a()) + 1) * sum + 1;
  const CohDims small = box_sum(fan, d, base + box_margin);
  const CohDims large = box_sum(fan, d, base + box_margin + 2);
  if (!(small == large))
    throw DiagnosticError("cohomology not stable under box enlargement: " + small.to_string() + " vs " +
                          large.to_string());
  return small;
}

CohDims ext_dims(const HirzebruchFan& fan, const PicClass& c1, const PicClass& c2, int box_margin)
{
  return cohomology_dims(fan, pic_to_divisor(fan, c2 - c1), box_margin);
}

VariableBlocks p2_p1_blocks()
{
  return VariableBlocks({{"x0", "x1", "x2"}, {"y0", "y1"}});
}

MultiHomPoly f2_equation()
{
  return MultiHomPoly::parse(p2_p1_blocks(), "1*x0*y0^2 + -1*x1*y1^2");
}

namespace {

using Univariate = std::vector<GaussianRational>; // coefficient of t^k at k

void trim(Univariate& p)
{
  while (!p.empty() && p.back().is_zero())
    p.pop_back();
}

Univariate remainder(Univariate a, const Univariate& b)
{
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const GaussianRational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k)
      a[shift + k] = a[shift + k] - factor * b[k];
    trim(a);
  }
  return a;
}

Univariate gcd(Univariate a, Univariate b)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

} // namespace

bool irreducible_bidegree_1d(const MultiHomPoly& f)
{
  const auto& blocks = f.blocks();
  const auto& md = f.multidegree();
  if (blocks.num_blocks() != 2 || blocks.blocks()[1].size() != 2 || !md || (*md)[0] != 1)
    throw PreconditionError("expected a form of bidegree (1,d) on P^n x P^1");
  const int d = (*md)[1];
  const std::size_t nx = blocks.blocks()[0].size();
  const std::size_t y0 = nx;

  // Binary form coefficient of each x_i, dehomogenized at y1 = 1.
  std::vector<Univariate> forms(nx, Univariate(static_cast<std::size_t>(d) + 1));
  for (const auto& [exps, coeff] : f.terms()) {
    std::size_t which = 0;
    while (exps[which] == 0)
      ++which;
    auto& form = forms[which];
    form[static_cast<std::size_t>(exps[y0])] = form[static_cast<std::size_t>(exps[y0])] + coeff;
  }
  bool divisible_by_y1 = true;
  Univariate g;
  for (auto& form : forms) {
    trim(form);
    if (form.empty())
      continue;
    if (static_cast<int>(form.size()) - 1 == d)
      divisible_by_y1 = false;
    g = g.empty() ? form : gcd(g, form);
  }
  if (g.empty())
    return false;
  return !divisible_by_y1 && g.size() == 1;
}

HypersurfaceReport check_p2_p1_hypersurface(const MultiHomPoly& f)
{
  HypersurfaceReport report;
  const auto& md = f.multidegree();
  report.bidegree_ok = md && *md == std::vector<int>{1, 2};
  if (!report.bidegree_ok)
    return report;
  report.irreducible = irreducible_bidegree_1d(f);
  const SmoothnessReport s = certify_hypersurface_smooth(f);
  report.smooth = s.smooth;
  report.charts_checked = s.charts_checked;
  report.failing_charts = s.failing_charts;
  return report;
}

bool verify_f2_hypersurface()
{
  return check_p2_p1_hypersurface(f2_equation()).pass();
}

} // namespace lg2::toric
