#include "lg2/fs_category.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "lg2/errors.hpp"
#include "lg2/exact_matrix.hpp"
#include "lg2/text_format.hpp"

namespace lg2::fs {

void GradedModule::add(const std::string& name, int degree)
{
  for (const auto& b : basis_)
    if (b.name == name)
      throw StructuralError("duplicate basis element '" + name + "'");
  basis_.push_back({name, degree});
  ++ranks_[degree];
}

std::size_t GradedModule::rank(int degree) const
{
  auto it = ranks_.find(degree);
  return it == ranks_.end() ? 0 : it->second;
}

long GradedModule::euler_characteristic() const
{
  long chi = 0;
  for (const auto& [d, r] : ranks_)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(r);
  return chi;
}

DirectedAInfCategory::DirectedAInfCategory(std::string name, Coefficients ring) : name_(std::move(name)), ring_(ring) {}

std::size_t DirectedAInfCategory::add_object(const std::string& name)
{
  if (std::find(objects_.begin(), objects_.end(), name) != objects_.end())
    throw StructuralError("duplicate object '" + name + "'");
  const std::size_t idx = objects_.size();
  objects_.push_back(name);
  const std::string id = "id_" + name;
  if (index_.count(id))
    throw StructuralError("identity name '" + id + "' already taken");
  index_[id] = generators_.size();
  generators_.push_back({id, idx, idx, 0, true});
  return idx;
}

void DirectedAInfCategory::add_generator(const std::string& name, std::size_t source, std::size_t target, int degree)
{
  if (source >= objects_.size() || target >= objects_.size())
    throw StructuralError("generator '" + name + "' refers to an unknown object");
  if (source >= target)
    throw StructuralError("generator '" + name + "' breaks directedness (needs source < target)");
  if (index_.count(name))
    throw StructuralError("duplicate generator '" + name + "'");
  index_[name] = generators_.size();
  generators_.push_back({name, source, target, degree, false});
  m1_certified_ = false;
}

const Generator& DirectedAInfCategory::generator(const std::string& name) const
{
  auto it = index_.find(name);
  if (it == index_.end())
    throw StructuralError("unknown generator '" + name + "'");
  return generators_[it->second];
}

bool DirectedAInfCategory::has_generator(const std::string& name) const
{
  return index_.count(name) > 0;
}

std::string DirectedAInfCategory::identity_of(std::size_t object) const
{
  return "id_" + objects_.at(object);
}

std::size_t DirectedAInfCategory::object_index(const std::string& name) const
{
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end())
    throw StructuralError("unknown object '" + name + "'");
  return static_cast<std::size_t>(it - objects_.begin());
}

void DirectedAInfCategory::check_entry(const ProductEntry& entry) const
{
  if (entry.inputs.empty())
    throw StructuralError("product entry with no inputs");
  if (entry.coefficient == 0)
    throw StructuralError("product entry with zero coefficient");
  int degree_sum = 0;
  for (std::size_t j = 0; j < entry.inputs.size(); ++j) {
    const Generator& g = generator(entry.inputs[j]);
    degree_sum += g.degree;
    if (j > 0 && generator(entry.inputs[j - 1]).target != g.source)
      throw StructuralError("product inputs are not composable at '" + g.name + "'");
  }
  const Generator& out = generator(entry.output);
  if (out.source != generator(entry.inputs.front()).source || out.target != generator(entry.inputs.back()).target)
    throw StructuralError("product output '" + out.name + "' lies in the wrong hom space");
  const int k = static_cast<int>(entry.arity());
  if (out.degree != degree_sum + 2 - k)
    throw StructuralError("m_" + std::to_string(k) + " entry with output '" + out.name + "' violates the degree rule");
}

void DirectedAInfCategory::add_product(const ProductEntry& entry)
{
  check_entry(entry);
  for (const auto& p : products_)
    if (p.inputs == entry.inputs && p.output == entry.output)
      throw StructuralError("duplicate product entry for output '" + entry.output + "'");
  products_.push_back(entry);
}

void DirectedAInfCategory::add_unit_products()
{
  for (const auto& g : generators_) {
    if (g.identity) {
      add_product({{g.name, g.name}, g.name, 1});
      continue;
    }
    add_product({{identity_of(g.source), g.name}, g.name, 1});
    add_product({{g.name, identity_of(g.target)}, g.name, 1});
  }
}

GradedModule DirectedAInfCategory::hom(std::size_t i, std::size_t j) const
{
  GradedModule m;
  for (const auto& g : generators_)
    if (g.source == i && g.target == j)
      m.add(g.name, g.degree);
  return m;
}

void DirectedAInfCategory::validate() const
{
  for (const auto& g : generators_)
    if (g.source > g.target || (g.source == g.target && !g.identity))
      throw StructuralError("generator '" + g.name + "' breaks directedness");
  for (const auto& p : products_)
    check_entry(p);
}

std::map<std::string, long> DirectedAInfCategory::apply(const std::vector<std::string>& chain) const
{
  std::map<std::string, long> out;
  for (const auto& p : products_)
    if (p.inputs == chain) {
      out[p.output] += p.coefficient;
      if (out[p.output] == 0)
        out.erase(p.output);
    }
  return out;
}

std::vector<std::vector<std::string>> DirectedAInfCategory::composable_chains(std::size_t max_length,
                                                                               bool skip_identities) const
{
  std::vector<std::vector<std::string>> chains;
  std::vector<std::string> current;
  std::function<void(std::size_t)> extend = [&](std::size_t at) {
    if (current.size() == max_length)
      return;
    for (const auto& g : generators_) {
      if (g.source != at || (skip_identities && g.identity))
        continue;
      current.push_back(g.name);
      chains.push_back(current);
      extend(g.target);
      current.pop_back();
    }
  };
  for (std::size_t o = 0; o < objects_.size(); ++o)
    extend(o);
  return chains;
}

namespace {

const char* ring_name(Coefficients c)
{
  return c == Coefficients::Integers ? "integers" : "rationals";
}

std::vector<ProductEntry> sorted_products(std::vector<ProductEntry> ps)
{
  std::sort(ps.begin(), ps.end(), [](const ProductEntry& a, const ProductEntry& b) {
    if (a.arity() != b.arity())
      return a.arity() < b.arity();
    if (a.inputs != b.inputs)
      return a.inputs < b.inputs;
    return a.output < b.output;
  });
  return ps;
}

} // namespace

std::string DirectedAInfCategory::to_text() const
{
  std::ostringstream out;
  out << "category " << name_ << "\n";
  out << "coefficients " << ring_name(ring_) << "\n";
  for (const auto& o : objects_)
    out << "object " << o << "\n";
  for (const auto& g : generators_)
    if (!g.identity)
      out << "generator " << g.name << " " << objects_[g.source] << " " << objects_[g.target] << " " << g.degree
          << "\n";
  for (const auto& p : sorted_products(products_)) {
    out << "product " << p.coefficient << " " << p.output;
    for (const auto& in : p.inputs)
      out << " " << in;
    out << "\n";
  }
  if (m1_certified_)
    out << "certified_m1\n";
  return out.str();
}

DirectedAInfCategory DirectedAInfCategory::from_text(const std::string& text)
{
  auto records = parse_records(text);
  if (records.empty() || records.front().keyword() != "category")
    throw StructuralError("category text must start with 'category <name>'");
  records.front().expect_fields(2);
  DirectedAInfCategory cat(records.front().fields[1]);
  bool certified = false;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string& kw = rec.keyword();
    if (kw == "coefficients") {
      rec.expect_fields(2);
      if (rec.fields[1] == "integers")
        cat.ring_ = Coefficients::Integers;
      else if (rec.fields[1] == "rationals")
        cat.ring_ = Coefficients::Rationals;
      else
        throw StructuralError("line " + std::to_string(rec.line) + ": unknown coefficient ring");
    } else if (kw == "object") {
      rec.expect_fields(2);
      cat.add_object(rec.fields[1]);
    } else if (kw == "generator") {
      rec.expect_fields(5);
      cat.add_generator(rec.fields[1], cat.object_index(rec.fields[2]), cat.object_index(rec.fields[3]),
                        static_cast<int>(rec.integer(4)));
    } else if (kw == "product") {
      rec.expect_at_least(4);
      ProductEntry e;
      e.coefficient = rec.integer(1);
      e.output = rec.fields[2];
      e.inputs.assign(rec.fields.begin() + 3, rec.fields.end());
      cat.add_product(e);
    } else if (kw == "certified_m1") {
      rec.expect_fields(1);
      certified = true;
    } else {
      throw StructuralError("line " + std::to_string(rec.line) + ": unknown keyword '" + kw + "'");
    }
  }
  cat.m1_certified_ = certified;
  return cat;
}

bool DirectedAInfCategory::operator==(const DirectedAInfCategory& other) const
{
  return name_ == other.name_ && ring_ == other.ring_ && objects_ == other.objects_ &&
         generators_ == other.generators_ && m1_certified_ == other.m1_certified_ &&
         sorted_products(products_) == sorted_products(other.products_);
}

DirectedAInfCategory lg2_category()
{
  DirectedAInfCategory cat("lg2");
  const auto l0 = cat.add_object("L0");
  const auto l1 = cat.add_object("L1");
  cat.add_generator("x0", l0, l1, 0);
  cat.add_generator("x1", l0, l1, 1);
  cat.add_unit_products();
  cat.certify_zero_differential();
  return cat;
}

std::optional<std::vector<std::string>> a_infinity_violation(const DirectedAInfCategory& cat, std::size_t k_max)
{
  if (k_max < 2)
    throw PreconditionError("A-infinity check needs k_max >= 2");
  cat.validate();
  for (const auto& chain : cat.composable_chains(k_max, false)) {
    const std::size_t n = chain.size();
    std::map<std::string, long> total;
    int prefix_degree = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (r > 0)
        prefix_degree += cat.generator(chain[r - 1]).degree;
      for (std::size_t s = 1; r + s <= n; ++s) {
        const std::size_t t = n - r - s;
        const std::vector<std::string> inner(chain.begin() + static_cast<long>(r),
                                             chain.begin() + static_cast<long>(r + s));
        const auto inner_value = cat.apply(inner);
        if (inner_value.empty())
          continue;
        const long exponent = static_cast<long>(r + s * t) + static_cast<long>(s) * prefix_degree;
        const long sign = (exponent % 2 == 0) ? 1 : -1;
        for (const auto& [b, c] : inner_value) {
          std::vector<std::string> outer(chain.begin(), chain.begin() + static_cast<long>(r));
          outer.push_back(b);
          outer.insert(outer.end(), chain.begin() + static_cast<long>(r + s), chain.end());
          for (const auto& [out, c2] : cat.apply(outer))
            total[out] += sign * c * c2;
        }
      }
    }
    for (const auto& [out, c] : total)
      if (c != 0)
        return chain;
  }
  return std::nullopt;
}

bool check_a_infinity(const DirectedAInfCategory& cat, std::size_t k_max)
{
  return !a_infinity_violation(cat, k_max).has_value();
}

bool check_strict_unitality(const DirectedAInfCategory& cat)
{
  for (const auto& g : cat.generators()) {
    const std::map<std::string, long> expected{{g.name, 1}};
    if (cat.apply({cat.identity_of(g.source), g.name}) != expected)
      return false;
    if (cat.apply({g.name, cat.identity_of(g.target)}) != expected)
      return false;
  }
  for (const auto& p : cat.products()) {
    if (p.arity() == 2)
      continue;
    for (const auto& in : p.inputs)
      if (cat.generator(in).identity)
        return false;
  }
  return true;
}

std::vector<VanishingCandidate> degree_forced_vanishing(const DirectedAInfCategory& cat, std::size_t max_arity,
                                                        bool respect_certified_differential)
{
  std::vector<VanishingCandidate> out;
  const bool skip_m1 = respect_certified_differential && cat.differential_certified();
  for (const auto& chain : cat.composable_chains(max_arity, true)) {
    const std::size_t k = chain.size();
    if (k == 1 && skip_m1)
      continue;
    int degree = 2 - static_cast<int>(k);
    for (const auto& name : chain)
      degree += cat.generator(name).degree;
    const std::size_t src = cat.generator(chain.front()).source;
    const std::size_t tgt = cat.generator(chain.back()).target;
    if (cat.hom(src, tgt).rank(degree) > 0)
      out.push_back({k, chain, degree});
  }
  return out;
}

MorseComplex morse_circle_complex(MorseGrading grading)
{
  MorseComplex mc;
  const int n = 1;
  const int ind_min = 0;
  const int ind_max = 1;
  auto degree_of = [&](int ind) { return grading == MorseGrading::Index ? ind : n - ind; };
  mc.points.push_back({"min", ind_min, degree_of(ind_min)});
  mc.points.push_back({"max", ind_max, degree_of(ind_max)});
  // Two gradient lines from the maximum down to the minimum, one on each
  // arc; their orientations disagree.
  mc.flow_lines.push_back({1, 0, +1});
  mc.flow_lines.push_back({1, 0, -1});

  std::vector<std::size_t> deg0, deg1;
  for (std::size_t p = 0; p < mc.points.size(); ++p)
    (mc.points[p].degree == 0 ? deg0 : deg1).push_back(p);
  mc.differential.assign(deg1.size(), std::vector<long>(deg0.size(), 0));
  IntMatrix im(deg1.size(), std::vector<std::int64_t>(deg0.size(), 0));
  for (const auto& line : mc.flow_lines)
    for (std::size_t r = 0; r < deg1.size(); ++r)
      for (std::size_t c = 0; c < deg0.size(); ++c) {
        const bool joins = (line.from == deg1[r] && line.to == deg0[c]) || (line.from == deg0[c] && line.to == deg1[r]);
        if (joins) {
          mc.differential[r][c] += line.sign;
          im[r][c] += line.sign;
        }
      }
  const std::size_t rank = rank_over_rationals(im);
  const std::size_t h0 = deg0.size() - rank;
  const std::size_t h1 = deg1.size() - rank;
  for (std::size_t k = 0; k < h0; ++k)
    mc.cohomology.add("x0" + (k ? "_" + std::to_string(k) : std::string()), 0);
  for (std::size_t k = 0; k < h1; ++k)
    mc.cohomology.add("x1" + (k ? "_" + std::to_string(k) : std::string()), 1);
  return mc;
}

GradedModule morse_circle_floer(MorseGrading grading)
{
  return morse_circle_complex(grading).cohomology;
}

HomTable::HomTable(std::vector<std::string> objects) : objects_(std::move(objects)) {}

void HomTable::set(std::size_t i, std::size_t j, std::map<int, std::size_t> ranks)
{
  if (i >= objects_.size() || j >= objects_.size() || i > j)
    throw PreconditionError("hom table entry outside the directed range");
  std::erase_if(ranks, [](const auto& kv) { return kv.second == 0; });
  entries_[{i, j}] = std::move(ranks);
}

std::map<int, std::size_t> HomTable::at(std::size_t i, std::size_t j) const
{
  auto it = entries_.find({i, j});
  return it == entries_.end() ? std::map<int, std::size_t>{} : it->second;
}

HomTable HomTable::shifted(const std::vector<int>& shifts) const
{
  if (shifts.size() != objects_.size())
    throw PreconditionError("one shift per object expected");
  HomTable out(objects_);
  for (const auto& [key, ranks] : entries_) {
    const int offset = shifts[key.second] - shifts[key.first];
    std::map<int, std::size_t> moved;
    for (const auto& [d, r] : ranks)
      moved[d - offset] = r;
    out.set(key.first, key.second, moved);
  }
  return out;
}

std::string HomTable::to_string() const
{
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < objects_.size(); ++j) {
      if (j)
        out << ", ";
      const auto ranks = i <= j ? at(i, j) : std::map<int, std::size_t>{};
      if (ranks.empty()) {
        out << 0;
      } else if (ranks.size() == 1 && ranks.begin()->first == 0) {
        out << ranks.begin()->second;
      } else {
        const int lo = ranks.begin()->first;
        const int hi = ranks.rbegin()->first;
        out << "(";
        for (int d = lo; d <= hi; ++d) {
          auto it = ranks.find(d);
          out << (d > lo ? "," : "") << (it == ranks.end() ? 0 : it->second);
        }
        out << ")";
        if (lo != 0)
          out << "@" << lo;
      }
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

bool HomTable::same_ranks(const HomTable& other) const
{
  if (size() != other.size())
    return false;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i; j < size(); ++j)
      if (at(i, j) != other.at(i, j))
        return false;
  return true;
}

HomTable hom_table(const DirectedAInfCategory& cat)
{
  HomTable table(cat.objects());
  for (std::size_t i = 0; i < cat.objects().size(); ++i)
    for (std::size_t j = i; j < cat.objects().size(); ++j) {
      std::map<int, std::size_t> ranks = cat.hom(i, j).ranks();
      table.set(i, j, ranks);
    }
  return table;
}

bool tables_equal(const HomTable& t1, const HomTable& t2, int shift_window)
{
  if (t1.size() != t2.size())
    return false;
  if (shift_window <= 0)
    return t1.same_ranks(t2);
  std::vector<int> shifts(t2.size(), -shift_window);
  while (true) {
    if (t1.same_ranks(t2.shifted(shifts)))
      return true;
    std::size_t k = 0;
    while (k < shifts.size() && shifts[k] == shift_window)
      shifts[k++] = -shift_window;
    if (k == shifts.size())
      return false;
    ++shifts[k];
  }
}

HomTable p1_mirror_table()
{
  HomTable t({"O", "O(1)"});
  t.set(0, 0, {{0, 1}});
  t.set(0, 1, {{0, 2}});
  t.set(1, 1, {{0, 1}});
  return t;
}

} // namespace lg2::fs
