#include "lg2/chart_elimination.hpp"

#include <algorithm>

#include "lg2/errors.hpp"

namespace lg2 {

namespace {

struct Branch {
  std::vector<MultiHomPoly> equations;
  std::string path;
};

void simplify(std::vector<MultiHomPoly>& eqs)
{
  eqs.erase(std::remove_if(eqs.begin(), eqs.end(), [](const MultiHomPoly& p) { return p.is_zero(); }),
            eqs.end());
  std::sort(eqs.begin(), eqs.end(), [](const MultiHomPoly& a, const MultiHomPoly& b) {
    return a.terms().size() < b.terms().size();
  });
}

// Coefficient of v^1 when p has degree exactly 1 in v.
MultiHomPoly linear_coefficient(const MultiHomPoly& p, std::size_t v)
{
  MultiHomPoly::Terms t;
  for (const auto& [exps, coeff] : p.terms()) {
    if (exps[v] != 1)
      continue;
    Exponents e = exps;
    e[v] = 0;
    t[e] += coeff;
  }
  return MultiHomPoly(p.blocks(), std::move(t));
}

bool divisible_by(const MultiHomPoly& p, std::size_t v)
{
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [v](const auto& term) { return term.first[v] > 0; });
}

void run(Branch branch, std::size_t depth, std::size_t max_depth, EliminationOutcome& out, bool& failed)
{
  if (failed)
    return;
  simplify(branch.equations);
  for (const auto& eq : branch.equations) {
    if (eq.is_constant()) {
      ++out.closed_branches;
      out.trace.push_back(branch.path + " => constant " + eq.to_string() + " != 0, closed");
      return;
    }
  }
  if (branch.equations.empty()) {
    failed = true;
    out.trace.push_back(branch.path + " => all equations vanished: common zeros exist");
    return;
  }
  if (depth >= max_depth) {
    failed = true;
    out.trace.push_back(branch.path + " => depth limit reached");
    return;
  }
  const auto& blocks = branch.equations.front().blocks();
  const std::size_t nvars = blocks.num_variables();

  for (const auto& eq : branch.equations) {
    for (std::size_t v = 0; v < nvars; ++v) {
      if (eq.degree_in(v) != 1)
        continue;
      MultiHomPoly c = linear_coefficient(eq, v);
      if (!c.is_constant() || c.is_zero())
        continue;
      const std::string& name = blocks.variables()[v];
      MultiHomPoly rest = eq - c * MultiHomPoly::variable(blocks, name);
      MultiHomPoly image = (GaussianRational(-1) / c.constant_term()) * rest;
      Branch next;
      next.path = branch.path + " | " + name + " := " + image.to_string();
      for (const auto& other : branch.equations)
        next.equations.push_back(substitute(other, {{name, image}}));
      run(std::move(next), depth + 1, max_depth, out, failed);
      return;
    }
  }

  for (const auto& eq : branch.equations) {
    for (std::size_t v = 0; v < nvars; ++v) {
      if (!divisible_by(eq, v))
        continue;
      const std::string& name = blocks.variables()[v];
      Branch zero;
      zero.path = branch.path + " | " + name + " = 0";
      MultiHomPoly zero_poly(blocks);
      for (const auto& other : branch.equations)
        zero.equations.push_back(substitute(other, {{name, zero_poly}}));
      run(std::move(zero), depth + 1, max_depth, out, failed);

      Branch quotient;
      quotient.path = branch.path + " | (" + eq.to_string() + ")/" + name + " = 0";
      for (const auto& other : branch.equations)
        quotient.equations.push_back(&other == &eq ? divide_by_variable(eq, v) : other);
      run(std::move(quotient), depth + 1, max_depth, out, failed);
      return;
    }
  }

  failed = true;
  std::string listing;
  for (const auto& eq : branch.equations)
    listing += (listing.empty() ? "" : ", ") + eq.to_string();
  out.trace.push_back(branch.path + " => no split applies to {" + listing + "}");
}

} // namespace

EliminationOutcome certify_no_common_zero(const std::vector<MultiHomPoly>& system, std::size_t max_depth)
{
  EliminationOutcome out;
  if (system.empty()) {
    out.trace.push_back("empty system: every point is a common zero");
    return out;
  }
  for (const auto& p : system)
    if (!(p.blocks() == system.front().blocks()))
      throw StructuralError("elimination system mixes variable blocks");
  bool failed = false;
  run(Branch{system, "root"}, 0, max_depth, out, failed);
  out.no_common_zero = !failed;
  return out;
}

std::string AffineChart::label() const
{
  std::string s;
  for (const auto& v : fixed)
    s += (s.empty() ? "" : ",") + v + "=1";
  return "{" + s + "}";
}

std::vector<AffineChart> affine_charts(const VariableBlocks& blocks)
{
  std::vector<AffineChart> charts{AffineChart{}};
  for (const auto& block : blocks.blocks()) {
    std::vector<AffineChart> next;
    for (const auto& partial : charts)
      for (const auto& v : block) {
        AffineChart c = partial;
        c.fixed.push_back(v);
        next.push_back(std::move(c));
      }
    charts = std::move(next);
  }
  return charts;
}

EliminationOutcome certify_chart_smooth(const MultiHomPoly& f, const AffineChart& chart)
{
  const auto& blocks = f.blocks();
  std::map<std::string, MultiHomPoly> dehomogenize;
  for (const auto& v : chart.fixed)
    dehomogenize[v] = MultiHomPoly::constant(blocks, GaussianRational(1));
  std::vector<MultiHomPoly> system{substitute(f, dehomogenize)};
  for (const auto& v : blocks.variables())
    system.push_back(substitute(derivative(f, v), dehomogenize));
  auto outcome = certify_no_common_zero(system);
  outcome.trace.insert(outcome.trace.begin(), "chart " + chart.label());
  return outcome;
}

SmoothnessReport certify_hypersurface_smooth(const MultiHomPoly& f)
{
  if (!f.multidegree())
    throw PreconditionError("smoothness check needs a multihomogeneous polynomial");
  SmoothnessReport report;
  for (const auto& chart : affine_charts(f.blocks())) {
    ++report.charts_checked;
    if (!certify_chart_smooth(f, chart).no_common_zero)
      report.failing_charts.push_back(chart.label());
  }
  report.smooth = report.failing_charts.empty();
  return report;
}

} // namespace lg2
