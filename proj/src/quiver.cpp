#include "lg2/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "lg2/errors.hpp"
#include "lg2/exact_sequence.hpp"
#include "lg2/text_format.hpp"

namespace lg2::quiver {

namespace {

void add_term(PathCombination& c, const Path& p, long coeff)
{
  if (coeff == 0)
    return;
  long& slot = c[p];
  slot += coeff;
  if (slot == 0)
    c.erase(p);
}

std::vector<std::string> split(const std::string& s, char sep)
{
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool path_less(const Path& a, const Path& b)
{
  if (a.length() != b.length())
    return a.length() < b.length();
  return a.arrows < b.arrows;
}

} // namespace

QuiverPresentation::QuiverPresentation(std::string name) : name_(std::move(name)) {}

std::size_t QuiverPresentation::add_vertex(const std::string& name)
{
  if (std::find(vertices_.begin(), vertices_.end(), name) != vertices_.end())
    throw StructuralError("duplicate vertex '" + name + "'");
  vertices_.push_back(name);
  return vertices_.size() - 1;
}

std::size_t QuiverPresentation::add_arrow(const std::string& name, std::size_t source, std::size_t target, int degree)
{
  if (source >= vertices_.size() || target >= vertices_.size())
    throw StructuralError("arrow '" + name + "' refers to an unknown vertex");
  if (name.find('*') != std::string::npos || name.rfind("e_", 0) == 0)
    throw StructuralError("arrow name '" + name + "' is reserved");
  for (const auto& a : arrows_)
    if (a.name == name)
      throw StructuralError("duplicate arrow '" + name + "'");
  arrows_.push_back({name, source, target, degree});
  return arrows_.size() - 1;
}

std::size_t QuiverPresentation::vertex_index(const std::string& name) const
{
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end())
    throw StructuralError("unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t QuiverPresentation::arrow_index(const std::string& name) const
{
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name)
      return i;
  throw StructuralError("unknown arrow '" + name + "'");
}

Path QuiverPresentation::arrow_path(const std::string& name) const
{
  const std::size_t a = arrow_index(name);
  return {arrows_[a].source, arrows_[a].target, {a}};
}

int QuiverPresentation::degree(const Path& p) const
{
  int d = 0;
  for (std::size_t a : p.arrows)
    d += arrows_[a].degree;
  return d;
}

Path QuiverPresentation::parse_path(const std::string& text) const
{
  if (text.rfind("e_", 0) == 0)
    return idempotent(vertex_index(text.substr(2)));
  auto factors = split(text, '*');
  std::reverse(factors.begin(), factors.end());
  Path p;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const std::size_t a = arrow_index(factors[k]);
    if (k == 0)
      p.source = arrows_[a].source;
    else if (arrows_[p.arrows.back()].target != arrows_[a].source)
      throw StructuralError("path '" + text + "' is not composable");
    p.arrows.push_back(a);
    p.target = arrows_[a].target;
  }
  return p;
}

std::string QuiverPresentation::path_name(const Path& p) const
{
  if (p.arrows.empty())
    return "e_" + vertices_[p.source];
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!out.empty())
      out += "*";
    out += arrows_[*it].name;
  }
  return out;
}

void QuiverPresentation::add_relation(const std::vector<std::pair<long, Path>>& terms)
{
  if (terms.empty() || terms.size() > 2)
    throw StructuralError("relations must be monomial or binomial");
  const auto& [c0, lead] = terms.front();
  if (c0 != 1 && c0 != -1)
    throw StructuralError("leading relation coefficient must be +1 or -1");
  if (lead.arrows.empty())
    throw StructuralError("a relation cannot lead with an idempotent");
  RewriteRule rule{lead, {}};
  if (terms.size() == 2) {
    const auto& [c1, tail] = terms[1];
    if (tail.source != lead.source || tail.target != lead.target)
      throw StructuralError("relation terms have different endpoints");
    if (degree(tail) != degree(lead))
      throw StructuralError("relation terms have different degrees");
    if (!path_less(tail, lead))
      throw StructuralError("second relation term must be smaller than the leading one");
    // c0 * lead + c1 * tail = 0  =>  lead = -(c1 / c0) * tail
    add_term(rule.replacement, tail, -c1 * c0);
  }
  rules_.push_back(rule);
  relations_.push_back(terms);
}

void QuiverPresentation::set_differential(const std::string& arrow, const PathCombination& image)
{
  const std::size_t a = arrow_index(arrow);
  for (const auto& [p, c] : image) {
    if (p.source != arrows_[a].source || p.target != arrows_[a].target)
      throw StructuralError("differential of '" + arrow + "' changes endpoints");
    if (degree(p) != arrows_[a].degree + 1)
      throw StructuralError("differential of '" + arrow + "' must raise degree by 1");
  }
  differential_[a] = image;
}

bool QuiverPresentation::is_normal(const Path& p) const
{
  for (const auto& rule : rules_)
    if (std::search(p.arrows.begin(), p.arrows.end(), rule.lead.arrows.begin(), rule.lead.arrows.end()) !=
        p.arrows.end())
      return false;
  return true;
}

PathCombination QuiverPresentation::reduce(const Path& p) const
{
  for (const auto& rule : rules_) {
    auto hit = std::search(p.arrows.begin(), p.arrows.end(), rule.lead.arrows.begin(), rule.lead.arrows.end());
    if (hit == p.arrows.end())
      continue;
    const std::vector<std::size_t> prefix(p.arrows.begin(), hit);
    const std::vector<std::size_t> suffix(hit + static_cast<long>(rule.lead.length()), p.arrows.end());
    PathCombination out;
    for (const auto& [rep, c] : rule.replacement) {
      Path q{p.source, p.target, prefix};
      q.arrows.insert(q.arrows.end(), rep.arrows.begin(), rep.arrows.end());
      q.arrows.insert(q.arrows.end(), suffix.begin(), suffix.end());
      for (const auto& [r, c2] : reduce(q))
        add_term(out, r, c * c2);
    }
    return out;
  }
  return {{p, 1}};
}

PathCombination QuiverPresentation::reduce(const PathCombination& c) const
{
  PathCombination out;
  for (const auto& [p, coeff] : c)
    for (const auto& [r, c2] : reduce(p))
      add_term(out, r, coeff * c2);
  return out;
}

PathCombination QuiverPresentation::multiply(const Path& p, const Path& q) const
{
  if (q.target != p.source)
    return {};
  Path r{q.source, p.target, q.arrows};
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  return reduce(r);
}

PathCombination QuiverPresentation::multiply(const PathCombination& p, const PathCombination& q) const
{
  PathCombination out;
  for (const auto& [a, ca] : p)
    for (const auto& [b, cb] : q)
      for (const auto& [r, cr] : multiply(a, b))
        add_term(out, r, ca * cb * cr);
  return out;
}

PathCombination QuiverPresentation::apply_differential(const Path& p) const
{
  PathCombination out;
  for (std::size_t m = 0; m < p.arrows.size(); ++m) {
    auto it = differential_.find(p.arrows[m]);
    if (it == differential_.end())
      continue;
    int later = 0;
    for (std::size_t l = m + 1; l < p.arrows.size(); ++l)
      later += arrows_[p.arrows[l]].degree;
    const long sign = (later % 2 == 0) ? 1 : -1;
    for (const auto& [img, c] : it->second) {
      Path q{p.source, p.target, std::vector<std::size_t>(p.arrows.begin(), p.arrows.begin() + static_cast<long>(m))};
      q.arrows.insert(q.arrows.end(), img.arrows.begin(), img.arrows.end());
      q.arrows.insert(q.arrows.end(), p.arrows.begin() + static_cast<long>(m + 1), p.arrows.end());
      for (const auto& [r, cr] : reduce(q))
        add_term(out, r, sign * c * cr);
    }
  }
  return out;
}

PathCombination QuiverPresentation::apply_differential(const PathCombination& c) const
{
  PathCombination out;
  for (const auto& [p, coeff] : c)
    for (const auto& [r, cr] : apply_differential(p))
      add_term(out, r, coeff * cr);
  return out;
}

std::string QuiverPresentation::to_text() const
{
  std::ostringstream out;
  out << "quiver " << name_ << "\n";
  for (const auto& v : vertices_)
    out << "vertex " << v << "\n";
  for (const auto& a : arrows_)
    out << "arrow " << a.name << " " << vertices_[a.source] << " " << vertices_[a.target] << " " << a.degree << "\n";
  for (const auto& rel : relations_) {
    out << "relation";
    for (const auto& [c, p] : rel)
      out << " " << c << " " << path_name(p);
    out << "\n";
  }
  for (const auto& [a, image] : differential_) {
    out << "differential " << arrows_[a].name;
    for (const auto& [p, c] : image)
      out << " " << c << " " << path_name(p);
    out << "\n";
  }
  return out.str();
}

QuiverPresentation QuiverPresentation::from_text(const std::string& text)
{
  auto records = parse_records(text);
  if (records.empty() || records.front().keyword() != "quiver")
    throw StructuralError("quiver text must start with 'quiver <name>'");
  records.front().expect_fields(2);
  QuiverPresentation q(records.front().fields[1]);
  auto terms_of = [&q](const TextRecord& rec, std::size_t from) {
    if ((rec.fields.size() - from) % 2 != 0)
      throw StructuralError("line " + std::to_string(rec.line) + ": expected coefficient/path pairs");
    std::vector<std::pair<long, Path>> terms;
    for (std::size_t k = from; k < rec.fields.size(); k += 2)
      terms.emplace_back(rec.integer(k), q.parse_path(rec.fields[k + 1]));
    return terms;
  };
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string& kw = rec.keyword();
    if (kw == "vertex") {
      rec.expect_fields(2);
      q.add_vertex(rec.fields[1]);
    } else if (kw == "arrow") {
      rec.expect_fields(5);
      q.add_arrow(rec.fields[1], q.vertex_index(rec.fields[2]), q.vertex_index(rec.fields[3]),
                  static_cast<int>(rec.integer(4)));
    } else if (kw == "relation") {
      rec.expect_at_least(3);
      q.add_relation(terms_of(rec, 1));
    } else if (kw == "differential") {
      rec.expect_at_least(2);
      PathCombination image;
      for (const auto& [c, p] : terms_of(rec, 2))
        add_term(image, p, c);
      q.set_differential(rec.fields[1], image);
    } else {
      throw StructuralError("line " + std::to_string(rec.line) + ": unknown keyword '" + kw + "'");
    }
  }
  return q;
}

std::vector<BasisPath> path_basis(const QuiverPresentation& q, std::size_t length_bound)
{
  std::vector<BasisPath> basis;
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < q.vertices().size(); ++v)
    frontier.push_back(q.idempotent(v));
  for (std::size_t len = 0; !frontier.empty(); ++len) {
    if (len == length_bound)
      throw DiagnosticError("path basis still growing at length " + std::to_string(length_bound) + " (e.g. " +
                            q.path_name(frontier.front()) + ")");
    std::vector<Path> next;
    for (const auto& p : frontier) {
      basis.push_back({p, q.path_name(p), q.degree(p)});
      for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        if (q.arrows()[a].source != p.target)
          continue;
        Path ext{p.source, q.arrows()[a].target, p.arrows};
        ext.arrows.push_back(a);
        if (q.is_normal(ext))
          next.push_back(ext);
      }
    }
    frontier = std::move(next);
  }
  return basis;
}

bool multiplication_associative(const QuiverPresentation& q, std::size_t length_bound)
{
  const auto basis = path_basis(q, length_bound);
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        const PathCombination pa{{a.path, 1}}, pb{{b.path, 1}}, pc{{c.path, 1}};
        if (q.multiply(q.multiply(pa, pb), pc) != q.multiply(pa, q.multiply(pb, pc)))
          return false;
      }
  return true;
}

HomComplex hom_complex(const QuiverPresentation& q, std::size_t i, std::size_t j, std::size_t length_bound)
{
  if (i >= q.vertices().size() || j >= q.vertices().size())
    throw PreconditionError("hom_complex: unknown vertex");
  HomComplex hc;
  std::map<int, std::vector<std::size_t>> by_degree;
  for (const auto& b : path_basis(q, length_bound))
    if (b.path.source == i && b.path.target == j) {
      by_degree[b.degree].push_back(hc.basis.size());
      hc.chains.add(b.name, b.degree);
      hc.basis.push_back(b);
    }
  std::map<int, std::size_t> ranks;
  for (const auto& [k, cols] : by_degree) {
    auto rows_it = by_degree.find(k + 1);
    const std::vector<std::size_t> rows = rows_it == by_degree.end() ? std::vector<std::size_t>{} : rows_it->second;
    IntMatrix m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (const auto& [p, coeff] : q.apply_differential(hc.basis[cols[c]].path)) {
        bool found = false;
        for (std::size_t r = 0; r < rows.size(); ++r)
          if (hc.basis[rows[r]].path == p) {
            m[r][c] = coeff;
            found = true;
          }
        if (!found)
          throw DiagnosticError("differential leaves the enumerated path basis");
      }
    }
    ranks[k] = rows.empty() ? 0 : rank_over_rationals(m);
    hc.differential[k] = std::move(m);
  }
  for (const auto& [k, idx] : by_degree) {
    long h = static_cast<long>(idx.size()) - static_cast<long>(ranks[k]);
    auto prev = ranks.find(k - 1);
    if (prev != ranks.end())
      h -= static_cast<long>(prev->second);
    if (h > 0)
      hc.cohomology[k] = static_cast<std::size_t>(h);
  }
  return hc;
}

bool differential_squares_to_zero(const QuiverPresentation& q)
{
  for (const auto& [a, image] : q.differential())
    if (!q.apply_differential(image).empty())
      return false;
  return true;
}

QuiverPresentation ordinary_quiver()
{
  QuiverPresentation q("ordinary");
  const auto v0 = q.add_vertex("v0");
  const auto v1 = q.add_vertex("v1");
  q.add_arrow("alpha", v0, v1, 0);
  q.add_arrow("beta", v1, v0, 0);
  q.add_relation({{1, q.parse_path("beta*alpha")}});
  return q;
}

QuiverPresentation dg_quiver(DgDifferential d)
{
  QuiverPresentation q(d == DgDifferential::Zero ? "dg_zero" : "dg_literal");
  const auto v0 = q.add_vertex("v0");
  const auto v1 = q.add_vertex("v1");
  q.add_arrow("alpha", v0, v1, 0);
  q.add_arrow("alphabar", v0, v1, 1);
  if (d == DgDifferential::Literal)
    q.set_differential("alpha", {{q.arrow_path("alphabar"), 1}});
  return q;
}

fs::HomTable cohomology_table(const QuiverPresentation& q, std::size_t length_bound)
{
  fs::HomTable table(q.vertices());
  for (std::size_t i = 0; i < q.vertices().size(); ++i)
    for (std::size_t j = i; j < q.vertices().size(); ++j) {
      if (i < j && !hom_complex(q, j, i, length_bound).basis.empty())
        throw PreconditionError("cohomology_table needs a directed quiver");
      const auto hc = hom_complex(q, i, j, length_bound);
      table.set(i, j, hc.cohomology);
    }
  return table;
}

bool composition_pattern_check()
{
  const QuiverPresentation q = ordinary_quiver();
  const Path alpha = q.arrow_path("alpha");
  const Path beta = q.arrow_path("beta");
  const PathCombination beta_alpha = q.multiply(beta, alpha);
  const PathCombination alpha_beta = q.multiply(alpha, beta);
  const PathCombination square = q.multiply(alpha_beta, alpha_beta);
  const bool ab_is_basis = alpha_beta.size() == 1 && alpha_beta.begin()->second == 1 &&
                           q.is_normal(alpha_beta.begin()->first) && alpha_beta.begin()->first.length() == 2;
  return beta_alpha.empty() && ab_is_basis && square.empty();
}

TiltingInputs tilting_inputs_from_toric(int box_margin)
{
  const toric::HirzebruchFan f2(2);
  const toric::PicClass o{0, 0};
  const toric::PicClass c{-1, 0};
  return {toric::ext_dims(f2, o, o, box_margin), toric::ext_dims(f2, c, o, box_margin),
          toric::ext_dims(f2, o, c, box_margin), toric::ext_dims(f2, c, c, box_margin)};
}

namespace {

using Slot = std::optional<long>;

std::array<Slot, 3> known(const toric::CohDims& d)
{
  return {d.h0, d.h1, d.h2};
}

// Nine-term sequence for a triangle X -> Y -> Z -> X[1]:
// covariant:      Hom(T,X) Hom(T,Y) Hom(T,Z) Ext1(T,X) ...
// contravariant:  Hom(Z,T) Hom(Y,T) Hom(X,T) Ext1(Z,T) ...
// Both are "first, middle, last" per degree.
std::array<long, 3> middle_terms(const std::array<Slot, 3>& first, const std::array<Slot, 3>& last,
                                 std::vector<Slot> ranks, const std::string& label, std::vector<std::string>& log)
{
  std::vector<Slot> dims;
  for (std::size_t k = 0; k < 3; ++k) {
    dims.push_back(first[k]);
    dims.push_back(std::nullopt);
    dims.push_back(last[k]);
  }
  if (ranks.empty())
    ranks.assign(8, std::nullopt);
  const SolvedSequence s = solve_exact_sequence(dims, ranks);
  std::ostringstream msg;
  msg << label << ": dims";
  for (long d : s.dims)
    msg << " " << d;
  log.push_back(msg.str());
  return {s.dims[1], s.dims[4], s.dims[7]};
}

toric::CohDims to_dims(const std::array<long, 3>& a)
{
  return {a[0], a[1], a[2]};
}

} // namespace

TiltingResult end_algebra_dims_tilting(const TiltingInputs& in, long connecting_rank)
{
  TiltingResult r;
  r.assumption = "connecting map Hom(O,O) -> Ext^1(O(-E),O) has rank " + std::to_string(connecting_rank) +
                 " (nontrivial extension class)";

  // Hom(-, O): Hom(C,O) Hom(E,O) Hom(O,O) | Ext1(C,O) Ext1(E,O) Ext1(O,O) | ...
  // The connecting map is the third map of the sequence.
  std::vector<Slot> ranks(8, std::nullopt);
  ranks[2] = connecting_rank;
  r.ext_e_o = to_dims(middle_terms(known(in.c_o), known(in.o_o), ranks, "Hom(-,O)", r.steps));

  // Hom(O, -): Hom(O,O) Hom(O,E) Hom(O,C) | ...
  r.ext_o_e = to_dims(middle_terms(known(in.o_o), known(in.o_c), {}, "Hom(O,-)", r.steps));

  // Hom(-, C): Hom(C,C) Hom(E,C) Hom(O,C) | ...
  r.ext_e_c = to_dims(middle_terms(known(in.c_c), known(in.o_c), {}, "Hom(-,O(-E))", r.steps));

  // Hom(E, -): Hom(E,O) Hom(E,E) Hom(E,C) | ...
  r.ext_e_e = to_dims(middle_terms(known(r.ext_e_o), known(r.ext_e_c), {}, "Hom(E,-)", r.steps));

  r.hom_o_o = in.o_o.h0;
  r.hom_o_e = r.ext_o_e.h0;
  r.hom_e_o = r.ext_e_o.h0;
  r.hom_e_e = r.ext_e_e.h0;
  auto higher_zero = [](const toric::CohDims& d) { return d.h1 == 0 && d.h2 == 0; };
  r.higher_ext_vanish =
      higher_zero(in.o_o) && higher_zero(r.ext_o_e) && higher_zero(r.ext_e_o) && higher_zero(r.ext_e_e);
  return r;
}

long grothendieck_rank(long m)
{
  if (m < 0)
    throw PreconditionError("number of exceptional factors must be nonnegative");
  return m;
}

long semiorthogonal_rank_sum(const std::vector<long>& parts)
{
  long total = 0;
  for (long p : parts) {
    if (p < 0)
      throw PreconditionError("K-group ranks are nonnegative");
    total += p;
  }
  return total;
}

} // namespace lg2::quiver
