#include "lg2/compact.hpp"

#include <sstream>

#include "lg2/errors.hpp"

namespace lg2::compact {

namespace {

using GR = GaussianRational;

MultiHomPoly var(const VariableBlocks& b, const std::string& name)
{
  return MultiHomPoly::variable(b, name);
}

MultiHomPoly cst(const VariableBlocks& b, const GR& c)
{
  return MultiHomPoly::constant(b, c);
}

} // namespace

bool projectively_equal(const std::vector<GR>& u, const std::vector<GR>& v)
{
  if (u.size() != v.size())
    return false;
  // u ~ v iff all 2x2 minors u_i v_j - u_j v_i vanish (both nonzero).
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (!(u[i] * v[j] - u[j] * v[i]).is_zero())
        return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i].is_zero() != v[i].is_zero())
      return false;
  return true;
}

MultiProjPoint::MultiProjPoint(std::vector<std::vector<GR>> factors) : factors_(std::move(factors))
{
  for (const auto& f : factors_) {
    bool nonzero = false;
    for (const auto& c : f)
      nonzero = nonzero || !c.is_zero();
    if (!nonzero)
      throw PreconditionError("projective coordinates cannot all vanish");
  }
}

bool MultiProjPoint::operator==(const MultiProjPoint& other) const
{
  if (factors_.size() != other.factors_.size())
    return false;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (!projectively_equal(factors_[k], other.factors_[k]))
      return false;
  return true;
}

std::string MultiProjPoint::to_string() const
{
  std::ostringstream out;
  if (factors_.size() != 1)
    out << "(";
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    out << (k ? "," : "") << "[";
    for (std::size_t i = 0; i < factors_[k].size(); ++i)
      out << (i ? ":" : "") << factors_[k][i].to_string();
    out << "]";
  }
  if (factors_.size() != 1)
    out << ")";
  return out.str();
}

Sl2GroupElement Sl2GroupElement::make(GR x, GR y, GR z, GR w)
{
  if (!(x * w - y * z == GR(1)))
    throw PreconditionError("SL(2) element needs xw - yz = 1");
  return {std::move(x), std::move(y), std::move(z), std::move(w)};
}

ExactMatrix Sl2GroupElement::matrix() const
{
  return ExactMatrix{{x, z}, {y, w}};
}

Sl2GroupElement random_sl2(std::mt19937_64& rng)
{
  static const ExactMatrix gens[4] = {
      ExactMatrix{{1, 1}, {0, 1}},
      ExactMatrix{{1, -1}, {0, 1}},
      ExactMatrix{{1, 0}, {1, 1}},
      ExactMatrix{{1, 0}, {-1, 1}},
  };
  const std::size_t length = 1 + static_cast<std::size_t>(rng() % 6);
  ExactMatrix m = ExactMatrix::identity(2);
  for (std::size_t k = 0; k < length; ++k)
    m = m * gens[rng() % 4];
  return Sl2GroupElement::make(m(0, 0), m(1, 0), m(0, 1), m(1, 1));
}

MultiHomPoly homogenize(const MultiHomPoly& p, const std::string& new_variable)
{
  if (p.blocks().num_blocks() != 1)
    throw PreconditionError("homogenize expects a single block of variables");
  auto names = p.blocks().variables();
  names.push_back(new_variable);
  const VariableBlocks blocks({names});
  int top = 0;
  for (const auto& [e, c] : p.terms()) {
    int d = 0;
    for (int k : e)
      d += k;
    top = std::max(top, d);
  }
  MultiHomPoly::Terms terms;
  for (const auto& [e, c] : p.terms()) {
    Exponents ext = e;
    int d = 0;
    for (int k : e)
      d += k;
    ext.push_back(top - d);
    terms[ext] = c;
  }
  return MultiHomPoly(blocks, terms);
}

MultiHomPoly homogenize_orbit()
{
  const VariableBlocks b({{"x", "y", "z"}});
  return homogenize(MultiHomPoly::parse(b, "1*x^2 + 1*y*z + -1"), "t");
}

ExactMatrix gram_matrix(const MultiHomPoly& q)
{
  const auto& md = q.multidegree();
  if (!md || md->size() != 1 || (*md)[0] != 2)
    throw PreconditionError("Gram matrix needs a quadratic form in one block");
  const std::size_t n = q.blocks().num_variables();
  ExactMatrix g(n, n);
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> at;
    for (std::size_t k = 0; k < n; ++k)
      for (int m = 0; m < e[k]; ++m)
        at.push_back(k);
    if (at[0] == at[1]) {
      g(at[0], at[0]) = c;
    } else {
      g(at[0], at[1]) = c * GR::fraction(1, 2);
      g(at[1], at[0]) = c * GR::fraction(1, 2);
    }
  }
  return g;
}

QuadricReport quadric_change_report()
{
  QuadricReport r;
  r.homogenized = homogenize_orbit();
  const auto& b = r.homogenized.blocks();
  const auto x = var(b, "x"), y = var(b, "y"), z = var(b, "z"), t = var(b, "t");
  r.transformed = substitute(r.homogenized, {{"x", x - t}, {"t", x + t}});
  // ad - bc with a = y, b = 2x, c = 2t, d = z
  r.segre_renamed = y * z - (cst(b, 2) * x) * (cst(b, 2) * t);
  r.scalar = proportional(r.transformed, r.segre_renamed);
  r.gram_rank = gram_matrix(r.transformed).rank();

  r.at_infinity = substitute(r.homogenized, {{"t", cst(b, 0)}});
  r.at_infinity_signed = substitute(r.at_infinity, {{"z", -z}});
  r.conic_rank = gram_matrix(r.at_infinity).rank();
  const MultiHomPoly expected_signed = x * x - y * z;
  const MultiHomPoly expected_homogenized = x * x + y * z - t * t;
  r.pass = r.homogenized == expected_homogenized && r.scalar.has_value() && r.gram_rank == 4 &&
           r.at_infinity_signed == expected_signed && r.conic_rank == 3;
  return r;
}

bool quadric_change_check()
{
  return quadric_change_report().pass;
}

ExactMatrix tensor_orbit_matrix(const Sl2GroupElement& a)
{
  return ExactMatrix{{a.x * a.w, -(a.x * a.z)}, {a.y * a.w, -(a.y * a.z)}};
}

ExactMatrix moment_map(const std::vector<GR>& v, const std::vector<GR>& eps)
{
  if (v.size() != 2 || eps.size() != 2)
    throw PreconditionError("moment map on C^2 needs two coordinates each");
  const GR pairing = eps[0] * v[0] + eps[1] * v[1];
  const GR half = pairing * GR::fraction(1, 2);
  return ExactMatrix{{v[0] * eps[0] - half, v[0] * eps[1]}, {v[1] * eps[0], v[1] * eps[1] - half}};
}

bool moment_orbit_check(const Sl2GroupElement& a)
{
  const ExactMatrix m = moment_map({a.x, a.y}, {a.w, -a.z});
  const ExactMatrix h_mu = ExactMatrix::diagonal({GR::fraction(1, 2), GR::fraction(-1, 2)});
  const ExactMatrix am = a.matrix();
  return m == am * h_mu * am.inverse();
}

MultiProjPoint eigenline_point(const Sl2GroupElement& a)
{
  return MultiProjPoint({{a.x, a.y}, {a.z, a.w}});
}

namespace {

// Kernel of the 2x2 matrix [[a,b],[c,d]] of rank 1.
std::vector<GR> kernel_line(const GR& a, const GR& b, const GR& c, const GR& d)
{
  if (!a.is_zero() || !b.is_zero())
    return {b, -a};
  if (!c.is_zero() || !d.is_zero())
    return {d, -c};
  throw DiagnosticError("eigenspace is not a line");
}

} // namespace

MultiProjPoint orbit_to_p1p1(const GR& x, const GR& y, const GR& z)
{
  if (!(x * x + y * z == GR(1)))
    throw PreconditionError("point is not on x^2 + yz = 1");
  return MultiProjPoint({kernel_line(x - GR(1), y, z, -x - GR(1)), kernel_line(x + GR(1), y, z, GR(1) - x)});
}

bool in_base_locus(const MultiProjPoint& pt)
{
  return pt == base_point(1) || pt == base_point(2);
}

MultiProjPoint base_point(int which)
{
  if (which == 1)
    return MultiProjPoint({{1, 0}, {1, 0}});
  if (which == 2)
    return MultiProjPoint({{0, 1}, {0, 1}});
  throw PreconditionError("base points are numbered 1 and 2");
}

MultiProjPoint rational_extension(const MultiProjPoint& pt)
{
  if (pt.factors().size() != 2 || pt.factors()[0].size() != 2 || pt.factors()[1].size() != 2)
    throw PreconditionError("rational extension is defined on P^1 x P^1");
  if (in_base_locus(pt))
    throw PreconditionError("indeterminate point");
  const auto& [x, y] = std::pair{pt.factors()[0][0], pt.factors()[0][1]};
  const auto& [z, w] = std::pair{pt.factors()[1][0], pt.factors()[1][1]};
  return MultiProjPoint({{x * w + y * z, x * w - y * z}});
}

VariableBlocks graph_blocks()
{
  return VariableBlocks({{"x", "y"}, {"z", "w"}, {"r", "s"}});
}

MultiHomPoly graph_surface()
{
  const auto b = graph_blocks();
  const auto x = var(b, "x"), y = var(b, "y"), z = var(b, "z"), w = var(b, "w"), r = var(b, "r"), s = var(b, "s");
  return s * (x * w + y * z) - r * (x * w - y * z);
}

SmoothnessReport graph_smooth_report()
{
  return certify_hypersurface_smooth(graph_surface());
}

bool graph_smooth_check()
{
  const auto rep = graph_smooth_report();
  return rep.smooth && rep.charts_checked == 8;
}

MultiHomPoly graph_fiber_over(const MultiProjPoint& pt)
{
  const auto b = graph_blocks();
  const auto& f = pt.factors();
  return substitute(graph_surface(), {{"x", cst(b, f.at(0).at(0))},
                                      {"y", cst(b, f.at(0).at(1))},
                                      {"z", cst(b, f.at(1).at(0))},
                                      {"w", cst(b, f.at(1).at(1))}});
}

MultiHomPoly compactified_fiber(const GR& r0, const GR& s0)
{
  if (r0.is_zero() && s0.is_zero())
    throw PreconditionError("[0:0] is not a point of P^1");
  const VariableBlocks b({{"x", "y"}, {"z", "w"}});
  const auto x = var(b, "x"), y = var(b, "y"), z = var(b, "z"), w = var(b, "w");
  return (s0 - r0) * (x * w) + (s0 + r0) * (y * z);
}

GR bilinear_determinant(const MultiHomPoly& form)
{
  const auto& md = form.multidegree();
  if (form.blocks().num_blocks() != 2 || !md || *md != std::vector<int>{1, 1})
    throw PreconditionError("expected a bidegree (1,1) form on P^1 x P^1");
  GR c[2][2];
  for (const auto& [e, coeff] : form.terms())
    c[e[0] ? 0 : 1][e[2] ? 0 : 1] = coeff;
  return c[0][0] * c[1][1] - c[0][1] * c[1][0];
}

bool is_singular_value(const GR& r0, const GR& s0)
{
  return bilinear_determinant(compactified_fiber(r0, s0)).is_zero();
}

CriticalData critical_data()
{
  CriticalData d;
  d.values = {MultiProjPoint({{1, 1}}), MultiProjPoint({{1, -1}})};
  d.points = {MultiProjPoint({{1, 0}, {0, 1}}), MultiProjPoint({{0, 1}, {1, 0}})};
  d.verified = true;
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& v = d.values[k].factors()[0];
    const MultiHomPoly f = compactified_fiber(v[0], v[1]);
    const auto& p = d.points[k].factors();
    const std::map<std::string, GR> at{{"x", p[0][0]}, {"y", p[0][1]}, {"z", p[1][0]}, {"w", p[1][1]}};
    if (!eval(f, at).is_zero())
      d.verified = false;
    for (const auto& name : f.blocks().variables())
      if (!eval(derivative(f, name), at).is_zero())
        d.verified = false;
    if (!is_singular_value(v[0], v[1]))
      d.verified = false;
  }
  return d;
}

std::vector<ScanRow> singular_value_scan(std::uint64_t seed, std::size_t n)
{
  std::vector<std::pair<GR, GR>> values{{1, 1}, {1, -1}};
  std::mt19937_64 rng(seed);
  while (values.size() < n + 2) {
    const long r = static_cast<long>(rng() % 19) - 9;
    const long s = static_cast<long>(rng() % 19) - 9;
    if (r == 0 && s == 0)
      continue;
    values.emplace_back(r, s);
  }
  std::vector<ScanRow> rows;
  for (const auto& [r, s] : values) {
    const GR det = bilinear_determinant(compactified_fiber(r, s));
    rows.push_back({r, s, det, det.is_zero()});
  }
  return rows;
}

namespace {

MultiHomPoly deformed_generator(const VariableBlocks& b)
{
  const auto x = var(b, "x"), y = var(b, "y"), z = var(b, "z");
  const auto one = cst(b, 1);
  return (x + one) * (x + one) - y * z - one;
}

} // namespace

bool deformed_ring_iso_check()
{
  const VariableBlocks b({{"x", "y", "z"}});
  const auto x = var(b, "x"), y = var(b, "y");
  const auto moved = substitute(deformed_generator(b), {{"x", x - cst(b, 1)}, {"y", -y}});
  const auto target = MultiHomPoly::parse(b, "1*x^2 + 1*y*z + -1");
  return proportional(moved, target).has_value();
}

bool deformed_ring_identity_control()
{
  const VariableBlocks b({{"x", "y", "z"}});
  const auto target = MultiHomPoly::parse(b, "1*x^2 + 1*y*z + -1");
  return proportional(deformed_generator(b), target).has_value();
}

bool sphere_avoids_base_locus(const std::vector<std::array<Rational, 3>>& sphere_points)
{
  for (const auto& [p, q, r] : sphere_points) {
    const GR x(r), y(-p, q), z(-p, -q);
    const MultiProjPoint pt = orbit_to_p1p1(x, y, z);
    const auto& u = pt.factors()[0];
    const auto& v = pt.factors()[1];
    if ((u[0] * v[1] - u[1] * v[0]).is_zero() || in_base_locus(pt))
      return false;
  }
  return true;
}

} // namespace lg2::compact
