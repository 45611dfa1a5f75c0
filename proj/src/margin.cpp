#include "isel/margin.hpp"

#include "tables.hpp"

namespace isel {
namespace {

void check(const MarginInstance& mi) {
  if (mi.rows() < 1 || mi.cols() < 1)
    throw UsageError("margin instance needs at least one row and column");
}

bool row_ok(const BigInt& sum, Satisfaction sat) {
  return sat == Satisfaction::Weak ? sum >= 0 : sum > 0;
}

}  // namespace

MarginSolve solve_margin(const MarginInstance& mi, EnumLimits limits) {
  check(mi);
  require_enumerable(mi.cols(), limits);
  const Mat<BigInt> w = detail::scale_rows_to_integers(mi.entries);
  const int l = static_cast<int>(mi.cols());
  const Index rows = mi.rows();

  if (mi.win_rule == WinRule::AllRows) {
    for (int s = 1; s <= l; ++s) {
      std::optional<IssueSet> found;
      for_each_combination(l, s, [&](std::uint32_t mask) {
        for (Index r = 0; r < rows; ++r) {
          BigInt sum = 0;
          for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1)
            sum += w(r, std::countr_zero(bits));
          if (!row_ok(sum, mi.satisfaction)) return false;
        }
        found = IssueSet::from_mask(mask);
        return true;
      });
      if (found)
        return MarginSolve{std::move(found), static_cast<int>(rows), true};
    }
    return MarginSolve{std::nullopt, 0, false};
  }

  // CountRows: incremental scan of every nonempty subset.
  Vec<BigInt> sums = Vec<BigInt>::Zero(rows);
  int best_count = -1;
  std::uint32_t best_mask = 0;
  dfs_subsets(
      l, [&](int k) { sums += w.col(k); }, [&](int k) { sums -= w.col(k); },
      [&](std::uint32_t mask) {
        int count = 0;
        for (Index r = 0; r < rows; ++r)
          if (row_ok(sums[r], mi.satisfaction)) ++count;
        if (count > best_count ||
            (count == best_count && canonical_subset_less(mask, best_mask))) {
          best_count = count;
          best_mask = mask;
        }
      });
  return MarginSolve{IssueSet::from_mask(best_mask), best_count,
                     best_count == static_cast<int>(rows)};
}

int count_satisfied(const MarginInstance& mi, const IssueSet& columns) {
  check(mi);
  if (columns.max_issue() > mi.cols())
    throw UsageError("column subset exceeds the margin instance width");
  int count = 0;
  for (Index r = 0; r < mi.rows(); ++r) {
    Rational sum = 0;
    for (int c : columns.members()) sum += mi.entries(r, c - 1);
    const bool ok = mi.satisfaction == Satisfaction::Weak ? sum >= 0 : sum > 0;
    if (ok) ++count;
  }
  return count;
}

}  // namespace isel
