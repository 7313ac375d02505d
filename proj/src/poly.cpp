#include "lg2/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lg2/errors.hpp"

namespace lg2 {

VariableBlocks::VariableBlocks(std::vector<std::vector<std::string>> blocks)
    : blocks_(std::move(blocks))
{
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (const auto& name : blocks_[b]) {
      if (name.empty())
        throw StructuralError("empty variable name");
      if (std::find(flat_.begin(), flat_.end(), name) != flat_.end())
        throw StructuralError("duplicate variable '" + name + "'");
      flat_.push_back(name);
      block_index_.push_back(b);
    }
  }
}

std::size_t VariableBlocks::index_of(const std::string& name) const
{
  auto it = std::find(flat_.begin(), flat_.end(), name);
  if (it == flat_.end())
    throw StructuralError("unknown variable '" + name + "' in blocks " + to_string());
  return static_cast<std::size_t>(it - flat_.begin());
}

bool VariableBlocks::contains(const std::string& name) const
{
  return std::find(flat_.begin(), flat_.end(), name) != flat_.end();
}

std::string VariableBlocks::to_string() const
{
  std::string out = "[";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b)
      out += ";";
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i)
        out += ",";
      out += blocks_[b][i];
    }
  }
  return out + "]";
}

namespace {

void require_same_blocks(const MultiHomPoly& p, const MultiHomPoly& q)
{
  if (!(p.blocks() == q.blocks()))
    throw StructuralError("variable block mismatch: " + p.blocks().to_string() + " vs " +
                          q.blocks().to_string());
}

} // namespace

MultiHomPoly::MultiHomPoly(VariableBlocks blocks) : blocks_(std::move(blocks)) {}

MultiHomPoly::MultiHomPoly(VariableBlocks blocks, Terms terms)
    : blocks_(std::move(blocks)), terms_(std::move(terms))
{
  normalize();
}

void MultiHomPoly::normalize()
{
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != blocks_.num_variables())
      throw StructuralError("exponent vector length does not match variable count");
    if (std::any_of(it->first.begin(), it->first.end(), [](int e) { return e < 0; }))
      throw StructuralError("negative exponent");
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  multidegree_.reset();
  if (terms_.empty())
    return;
  std::optional<std::vector<int>> common;
  for (const auto& [exps, coeff] : terms_) {
    std::vector<int> deg(blocks_.num_blocks(), 0);
    for (std::size_t v = 0; v < exps.size(); ++v)
      deg[blocks_.block_of(v)] += exps[v];
    if (!common)
      common = deg;
    else if (*common != deg)
      return;
  }
  multidegree_ = common;
}

MultiHomPoly MultiHomPoly::constant(const VariableBlocks& blocks, const GaussianRational& c)
{
  Terms t;
  t[Exponents(blocks.num_variables(), 0)] = c;
  return MultiHomPoly(blocks, std::move(t));
}

MultiHomPoly MultiHomPoly::variable(const VariableBlocks& blocks, const std::string& name)
{
  Exponents e(blocks.num_variables(), 0);
  e[blocks.index_of(name)] = 1;
  Terms t;
  t[e] = GaussianRational(1);
  return MultiHomPoly(blocks, std::move(t));
}

bool MultiHomPoly::is_constant() const
{
  for (const auto& [exps, coeff] : terms_)
    if (std::any_of(exps.begin(), exps.end(), [](int e) { return e != 0; }))
      return false;
  return true;
}

GaussianRational MultiHomPoly::constant_term() const
{
  auto it = terms_.find(Exponents(blocks_.num_variables(), 0));
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

int MultiHomPoly::degree_in(std::size_t var_index) const
{
  int d = 0;
  for (const auto& [exps, coeff] : terms_)
    d = std::max(d, exps.at(var_index));
  return d;
}

MultiHomPoly MultiHomPoly::operator-() const
{
  Terms t = terms_;
  for (auto& [e, c] : t)
    c = -c;
  return MultiHomPoly(blocks_, std::move(t));
}

MultiHomPoly operator+(const MultiHomPoly& p, const MultiHomPoly& q)
{
  require_same_blocks(p, q);
  MultiHomPoly::Terms t = p.terms_;
  for (const auto& [e, c] : q.terms_)
    t[e] += c;
  return MultiHomPoly(p.blocks_, std::move(t));
}

MultiHomPoly operator-(const MultiHomPoly& p, const MultiHomPoly& q)
{
  return p + (-q);
}

MultiHomPoly operator*(const MultiHomPoly& p, const MultiHomPoly& q)
{
  require_same_blocks(p, q);
  MultiHomPoly::Terms t;
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : q.terms_) {
      Exponents e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = e1[i] + e2[i];
      t[e] += c1 * c2;
    }
  }
  return MultiHomPoly(p.blocks_, std::move(t));
}

MultiHomPoly operator*(const GaussianRational& c, const MultiHomPoly& p)
{
  MultiHomPoly::Terms t = p.terms_;
  for (auto& [e, v] : t)
    v *= c;
  return MultiHomPoly(p.blocks_, std::move(t));
}

MultiHomPoly MultiHomPoly::pow(unsigned exponent) const
{
  MultiHomPoly result = constant(blocks_, GaussianRational(1));
  MultiHomPoly base = *this;
  while (exponent) {
    if (exponent & 1u)
      result = result * base;
    base = base * base;
    exponent >>= 1u;
  }
  return result;
}

std::string MultiHomPoly::to_string() const
{
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first)
      out << " + ";
    first = false;
    out << it->second.to_string();
    for (std::size_t v = 0; v < it->first.size(); ++v) {
      int e = it->first[v];
      if (e == 0)
        continue;
      out << "*" << blocks_.variables()[v];
      if (e > 1)
        out << "^" << e;
    }
  }
  return out.str();
}

namespace {

std::string trim(const std::string& s)
{
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top_level(const std::string& s, char sep)
{
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(')
      ++depth;
    else if (ch == ')')
      --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool looks_numeric(const std::string& s)
{
  if (s.empty())
    return false;
  if (s.front() == '(')
    return true;
  std::size_t i = (s.front() == '-') ? 1 : 0;
  return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
}

} // namespace

MultiHomPoly MultiHomPoly::parse(const VariableBlocks& blocks, const std::string& text)
{
  std::string body = trim(text);
  if (body.empty())
    throw StructuralError("empty polynomial text");
  if (body == "0")
    return MultiHomPoly(blocks);
  Terms terms;
  for (const auto& raw : split_top_level(body, '+')) {
    std::string term = trim(raw);
    if (term.empty())
      throw StructuralError("empty term in '" + text + "'");
    GaussianRational coeff(1);
    Exponents exps(blocks.num_variables(), 0);
    auto factors = split_top_level(term, '*');
    std::size_t start = 0;
    std::string head = trim(factors[0]);
    if (looks_numeric(head)) {
      coeff = GaussianRational::parse(head);
      start = 1;
    } else if (!head.empty() && head.front() == '-') {
      coeff = GaussianRational(-1);
      factors[0] = head.substr(1);
    }
    for (std::size_t f = start; f < factors.size(); ++f) {
      std::string factor = trim(factors[f]);
      int e = 1;
      auto caret = factor.find('^');
      if (caret != std::string::npos) {
        try {
          e = std::stoi(factor.substr(caret + 1));
        } catch (const std::exception&) {
          throw StructuralError("bad exponent in '" + factor + "'");
        }
        factor = factor.substr(0, caret);
      }
      exps[blocks.index_of(factor)] += e;
    }
    terms[exps] += coeff;
  }
  return MultiHomPoly(blocks, std::move(terms));
}

MultiHomPoly poly_add(const MultiHomPoly& p, const MultiHomPoly& q) { return p + q; }
MultiHomPoly poly_mul(const MultiHomPoly& p, const MultiHomPoly& q) { return p * q; }

MultiHomPoly substitute(const MultiHomPoly& p, const std::map<std::string, MultiHomPoly>& images)
{
  const auto& blocks = p.blocks();
  std::vector<MultiHomPoly> image_of(blocks.num_variables());
  for (std::size_t v = 0; v < blocks.num_variables(); ++v)
    image_of[v] = MultiHomPoly::variable(blocks, blocks.variables()[v]);
  for (const auto& [name, img] : images) {
    if (!(img.blocks() == blocks))
      throw StructuralError("substitution image for '" + name + "' uses foreign variable blocks");
    image_of[blocks.index_of(name)] = img;
  }
  MultiHomPoly result(blocks);
  for (const auto& [exps, coeff] : p.terms()) {
    MultiHomPoly term = MultiHomPoly::constant(blocks, coeff);
    for (std::size_t v = 0; v < exps.size(); ++v)
      if (exps[v] > 0)
        term = term * image_of[v].pow(static_cast<unsigned>(exps[v]));
    result = result + term;
  }
  return result;
}

MultiHomPoly derivative(const MultiHomPoly& p, const std::string& var)
{
  std::size_t v = p.blocks().index_of(var);
  MultiHomPoly::Terms t;
  for (const auto& [exps, coeff] : p.terms()) {
    if (exps[v] == 0)
      continue;
    Exponents e = exps;
    e[v] -= 1;
    t[e] += GaussianRational(static_cast<long>(exps[v])) * coeff;
  }
  return MultiHomPoly(p.blocks(), std::move(t));
}

std::vector<std::vector<MultiHomPoly>> jacobian(const std::vector<MultiHomPoly>& polys,
                                                const std::vector<std::string>& vars)
{
  std::vector<std::vector<MultiHomPoly>> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) {
    std::vector<MultiHomPoly> row;
    row.reserve(vars.size());
    for (const auto& v : vars)
      row.push_back(derivative(p, v));
    rows.push_back(std::move(row));
  }
  return rows;
}

GaussianRational eval(const MultiHomPoly& p, const std::map<std::string, GaussianRational>& point)
{
  const auto& blocks = p.blocks();
  std::vector<const GaussianRational*> values(blocks.num_variables(), nullptr);
  for (const auto& [name, value] : point)
    values[blocks.index_of(name)] = &value;
  GaussianRational sum(0);
  for (const auto& [exps, coeff] : p.terms()) {
    GaussianRational term = coeff;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0)
        continue;
      if (!values[v])
        throw StructuralError("no value assigned to variable '" + blocks.variables()[v] + "'");
      term *= pow(*values[v], static_cast<unsigned>(exps[v]));
    }
    sum += term;
  }
  return sum;
}

std::optional<GaussianRational> proportional(const MultiHomPoly& p, const MultiHomPoly& q)
{
  require_same_blocks(p, q);
  if (p.is_zero() || q.is_zero() || p.terms().size() != q.terms().size())
    return std::nullopt;
  const auto& [e0, c0] = *q.terms().begin();
  auto it = p.terms().find(e0);
  if (it == p.terms().end())
    return std::nullopt;
  GaussianRational ratio = it->second / c0;
  if (ratio * q == p)
    return ratio;
  return std::nullopt;
}

MultiHomPoly divide_by_variable(const MultiHomPoly& p, std::size_t var_index)
{
  MultiHomPoly::Terms t;
  for (const auto& [exps, coeff] : p.terms()) {
    if (exps.at(var_index) == 0)
      throw StructuralError("term not divisible by '" + p.blocks().variables()[var_index] + "'");
    Exponents e = exps;
    e[var_index] -= 1;
    t[e] = coeff;
  }
  return MultiHomPoly(p.blocks(), std::move(t));
}

} // namespace lg2
