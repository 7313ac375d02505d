#include "lg2/text_format.hpp"

#include <sstream>

#include "lg2/errors.hpp"

namespace lg2 {

void TextRecord::expect_fields(std::size_t n) const
{
  if (fields.size() != n)
    throw StructuralError("line " + std::to_string(line) + ": '" + keyword() + "' expects " +
                          std::to_string(n - 1) + " arguments");
}

void TextRecord::expect_at_least(std::size_t n) const
{
  if (fields.size() < n)
    throw StructuralError("line " + std::to_string(line) + ": '" + keyword() + "' expects at least " +
                          std::to_string(n - 1) + " arguments");
}

long TextRecord::integer(std::size_t i) const
{
  const std::string& s = fields.at(i);
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty())
    throw StructuralError("line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
  return v;
}

std::vector<TextRecord> parse_records(const std::string& text)
{
  std::vector<TextRecord> records;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos)
      raw.erase(hash);
    std::istringstream words(raw);
    TextRecord rec;
    rec.line = line_no;
    for (std::string w; words >> w;)
      rec.fields.push_back(w);
    if (!rec.fields.empty())
      records.push_back(std::move(rec));
  }
  return records;
}

} // namespace lg2
