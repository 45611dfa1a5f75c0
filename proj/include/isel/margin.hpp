#pragma once

#include "isel/election.hpp"
#include "isel/subsets.hpp"

#include <optional>

namespace isel {

// Row-sum satisfaction test over a selected column subset.
enum class Satisfaction { Weak, Strict };  // sum >= 0 vs sum > 0

// Decision (every row satisfied) vs optimization (count satisfied rows).
enum class WinRule { AllRows, CountRows };

/// Rational rows-by-columns matrix whose row sums over a nonempty column
/// subset encode win/lose comparisons.
struct MarginInstance {
  RatMat entries;
  Satisfaction satisfaction = Satisfaction::Weak;
  WinRule win_rule = WinRule::AllRows;

  Index rows() const { return entries.rows(); }
  Index cols() const { return entries.cols(); }
};

struct MarginSolve {
  std::optional<IssueSet> columns;  // witness subset, canonical-first
  int satisfied_rows = 0;
  bool all_rows = false;
};

/// Exhaustive scan over nonempty column subsets. AllRows returns the first
/// subset (canonical order) satisfying every row, or no subset. CountRows
/// returns the maximum satisfied-row count and its canonical-first argmax.
MarginSolve solve_margin(const MarginInstance& mi, EnumLimits limits = {});

/// Satisfied-row count of one explicit subset, straight from the rational
/// definition.
int count_satisfied(const MarginInstance& mi, const IssueSet& columns);

}  // namespace isel
