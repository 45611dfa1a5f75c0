#include "isel/exact.hpp"

#include "tables.hpp"

namespace isel {
namespace {

template <class Int>
std::optional<IssueSet> isc_scan(const detail::VoteTables<Int>& vt,
                                 TieRule tie) {
  const int l = static_cast<int>(vt.l);
  for (int s = 1; s <= l; ++s) {
    std::optional<IssueSet> found;
    for_each_combination(l, s, [&](std::uint32_t mask) {
      if (vt.target_wins(mask, tie)) {
        found = IssueSet::from_mask(mask);
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

template <class Int>
std::uint32_t maxsupport_scan(const detail::VoteTables<Int>& vt, TieRule tie,
                              int* best_support_out) {
  const auto mc = detail::MarginColumns<Int>::from(vt);
  Mat<Int> sums = Mat<Int>::Zero(mc.n, mc.rivals);
  int best_support = -1;
  std::uint32_t best_mask = 0;
  dfs_subsets(
      static_cast<int>(mc.l),
      [&](int k) {
        for (Index r = 0; r < mc.rivals; ++r)
          sums.col(r) += mc.margin[static_cast<std::size_t>(r)].col(k);
      },
      [&](int k) {
        for (Index r = 0; r < mc.rivals; ++r)
          sums.col(r) -= mc.margin[static_cast<std::size_t>(r)].col(k);
      },
      [&](std::uint32_t mask) {
        const int sup = mc.support_from_sums(sums, tie);
        if (sup > best_support ||
            (sup == best_support && canonical_subset_less(mask, best_mask))) {
          best_support = sup;
          best_mask = mask;
        }
      });
  *best_support_out = best_support;
  return best_mask;
}

}  // namespace

std::optional<IssueSet> solve_isc_exhaustive(const Election& e, NormOrder norm,
                                             TieRule tie, EnumLimits limits) {
  require_enumerable(e.num_issues(), limits);
  const auto tables = detail::prepare_tables(e, norm);
  return std::visit([&](const auto& vt) { return isc_scan(vt, tie); }, tables);
}

SolveOutcome solve_maxsupport_exhaustive(const Election& e, NormOrder norm,
                                         TieRule tie, EnumLimits limits) {
  require_enumerable(e.num_issues(), limits);
  const auto tables = detail::prepare_tables(e, norm);
  int best_support = -1;
  const std::uint32_t best_mask = std::visit(
      [&](const auto& vt) { return maxsupport_scan(vt, tie, &best_support); },
      tables);
  SolveOutcome outcome =
      outcome_for(e, IssueSet::from_mask(best_mask), norm, tie);
  return outcome;
}

}  // namespace isel
