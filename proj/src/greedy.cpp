#include "isel/greedy.hpp"

#include "tables.hpp"

namespace isel {
namespace {

template <class Int>
std::uint32_t greedy_scan(const detail::VoteTables<Int>& vt, TieRule tie,
                          GreedyTrace* trace) {
  const int l = static_cast<int>(vt.l);
  int current = -1;
  int first = 0;
  for (int k = 0; k < l; ++k) {
    const int sup = vt.support(std::uint32_t{1} << k, tie);
    if (sup > current) {
      current = sup;
      first = k;
    }
  }
  std::uint32_t mask = std::uint32_t{1} << first;
  if (trace) trace->steps.emplace_back(first + 1, current);

  for (;;) {
    int best = current;
    int pick = -1;
    for (int k = 0; k < l; ++k) {
      if (mask & (std::uint32_t{1} << k)) continue;
      const int sup = vt.support(mask | (std::uint32_t{1} << k), tie);
      if (sup > best) {  // strict improvement; first index keeps ties
        best = sup;
        pick = k;
      }
    }
    if (pick < 0) break;
    mask |= std::uint32_t{1} << pick;
    current = best;
    if (trace) trace->steps.emplace_back(pick + 1, current);
  }
  return mask;
}

}  // namespace

SolveOutcome greedy_max_support(const Election& e, NormOrder norm, TieRule tie,
                                GreedyTrace* trace) {
  const auto tables = detail::prepare_tables(e, norm);
  const std::uint32_t mask = std::visit(
      [&](const auto& vt) { return greedy_scan(vt, tie, trace); }, tables);
  return outcome_for(e, IssueSet::from_mask(mask), norm, tie);
}

}  // namespace isel
