#ifndef LG2_TEXT_FORMAT_HPP
#define LG2_TEXT_FORMAT_HPP

#include <string>
#include <vector>

namespace lg2 {

/// One non-blank line of a fixture file, split on whitespace. '#' starts
/// a comment.
struct TextRecord {
  std::size_t line = 0;
  std::vector<std::string> fields;

  const std::string& keyword() const { return fields.front(); }
  /// Throws StructuralError unless the record has exactly n fields.
  void expect_fields(std::size_t n) const;
  void expect_at_least(std::size_t n) const;
  long integer(std::size_t i) const;
};

std::vector<TextRecord> parse_records(const std::string& text);

} // namespace lg2

#endif
