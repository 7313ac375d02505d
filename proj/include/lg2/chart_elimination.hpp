#ifndef LG2_CHART_ELIMINATION_HPP
#define LG2_CHART_ELIMINATION_HPP

#include <string>
#include <vector>

#include "lg2/poly.hpp"

namespace lg2 {

/// Outcome of a case-split search for common zeros of a polynomial system.
struct EliminationOutcome {
  /// True when every branch closed on a nonzero constant, i.e. the
  /// system provably has no common zero over C.
  bool no_common_zero = false;
  std::size_t closed_branches = 0;
  /// Branch log, one line per step; the last line explains a failure.
  std::vector<std::string> trace;
};

/// Decides emptiness of V(system) by exact case splits:
///  - a nonzero constant closes the branch;
///  - an equation linear in v with constant coefficient eliminates v;
///  - an equation divisible by v splits into v = 0 and (equation / v).
/// When none applies the outcome is left undecided (no_common_zero false).
/// Every step is an exact polynomial identity, so a positive answer is a
/// certificate; a negative answer only means the heuristics ran out.
EliminationOutcome certify_no_common_zero(const std::vector<MultiHomPoly>& system,
                                          std::size_t max_depth = 32);

/// Multihomogeneous chart of a product of projective spaces: one
/// coordinate per block set to 1.
struct AffineChart {
  std::vector<std::string> fixed; // one variable name per block
  std::string label() const;
};

/// All charts: product over blocks of the block's coordinates.
std::vector<AffineChart> affine_charts(const VariableBlocks& blocks);

/// Smoothness of the hypersurface {f = 0} on one chart: the singular
/// locus there is V(f, all partials) after dehomogenization. For a
/// multihomogeneous f the Euler relations make the full set of partials
/// equivalent to f plus the chart partials.
EliminationOutcome certify_chart_smooth(const MultiHomPoly& f, const AffineChart& chart);

/// Hypersurface smoothness report over every chart.
struct SmoothnessReport {
  bool smooth = false;
  std::size_t charts_checked = 0;
  std::vector<std::string> failing_charts;
};

SmoothnessReport certify_hypersurface_smooth(const MultiHomPoly& f);

} // namespace lg2

#endif
