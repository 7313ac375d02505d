#ifndef LG2_EXACT_SEQUENCE_HPP
#define LG2_EXACT_SEQUENCE_HPP

#include <optional>
#include <string>
#include <vector>

namespace lg2 {

/// Dimension bookkeeping for an exact sequence
///   0 -> V_0 -> V_1 -> ... -> V_{n-1} -> 0.
/// Exactness gives dim V_i = r_{i-1} + r_i, with r_i the rank of
/// V_i -> V_{i+1} (r_{-1} = r_{n-1} = 0), and 0 <= r_i <= min(dim V_i, dim V_{i+1}).
struct SolvedSequence {
  std::vector<long> dims;
  std::vector<long> ranks; // size n - 1
};

/// Fills in the unknowns by propagating those relations to a fixed point.
/// Throws DiagnosticError when the data is inconsistent or when some value
/// stays undetermined. `ranks`, when given, must have size n - 1.
SolvedSequence solve_exact_sequence(std::vector<std::optional<long>> dims,
                                    std::vector<std::optional<long>> ranks = {});

} // namespace lg2

#endif
