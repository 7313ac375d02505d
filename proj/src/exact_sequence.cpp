#include "lg2/exact_sequence.hpp"

#include <algorithm>

#include "lg2/errors.hpp"

namespace lg2 {

namespace {

void assign(std::optional<long>& slot, long value, const std::string& what)
{
  if (value < 0)
    throw DiagnosticError("exact sequence forces a negative " + what);
  if (slot && *slot != value)
    throw DiagnosticError("exact sequence data inconsistent at " + what);
  slot = value;
}

} // namespace

SolvedSequence solve_exact_sequence(std::vector<std::optional<long>> dims, std::vector<std::optional<long>> ranks)
{
  const std::size_t n = dims.size();
  if (n == 0)
    return {};
  if (ranks.empty())
    ranks.assign(n - 1, std::nullopt);
  if (ranks.size() != n - 1)
    throw PreconditionError("need one rank per map of the sequence");

  // r(i) for i in [-1, n-1]; the two ends are zero.
  std::optional<long> zero = 0;
  auto rank_slot = [&](long i) -> std::optional<long>& {
    if (i < 0 || i >= static_cast<long>(n) - 1) {
      zero = 0;
      return zero;
    }
    return ranks[static_cast<std::size_t>(i)];
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      auto& d = dims[i];
      auto& left = rank_slot(static_cast<long>(i) - 1);
      const bool left_known = left.has_value();
      auto& right = rank_slot(static_cast<long>(i));
      const std::string where = "position " + std::to_string(i);
      const int known = (d ? 1 : 0) + (left_known ? 1 : 0) + (right ? 1 : 0);
      if (known == 3) {
        if (*d != *left + *right)
          throw DiagnosticError("exact sequence data inconsistent at " + where);
      } else if (known == 2) {
        if (!d)
          assign(d, *left + *right, "dimension at " + where);
        else if (!left_known)
          assign(rank_slot(static_cast<long>(i) - 1), *d - *right, "rank before " + where);
        else
          assign(rank_slot(static_cast<long>(i)), *d - *left, "rank after " + where);
        changed = true;
      }
    }
    // A map out of or into a zero space has rank zero.
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (ranks[i])
        continue;
      if ((dims[i] && *dims[i] == 0) || (dims[i + 1] && *dims[i + 1] == 0)) {
        ranks[i] = 0;
        changed = true;
      }
    }
  }
  for (const auto& r : ranks)
    if (r && (*r < 0))
      throw DiagnosticError("exact sequence forces a negative rank");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (ranks[i] && dims[i] && dims[i + 1] && *ranks[i] > std::min(*dims[i], *dims[i + 1]))
      throw DiagnosticError("rank exceeds the dimension of a space in the sequence");

  SolvedSequence out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!dims[i])
      throw DiagnosticError("exact sequence leaves the dimension at position " + std::to_string(i) + " undetermined");
    out.dims.push_back(*dims[i]);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!ranks[i])
      throw DiagnosticError("exact sequence leaves a rank undetermined");
    out.ranks.push_back(*ranks[i]);
  }
  return out;
}

} // namespace lg2
