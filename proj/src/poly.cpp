#include "isel/poly.hpp"

#include "tables.hpp"

namespace isel {
namespace {

void require_regime(const Election& e, Index voters, const char* who) {
  validate(e);
  if (e.domain != Domain::Binary)
    throw UsageError(std::string(who) + " expects a binary election");
  if (e.num_voters() != voters)
    throw UsageError(std::string(who) + " expects exactly " +
                     std::to_string(voters) + " voter(s)");
}

Election sub_election(const Election& e, std::vector<Index> voters) {
  Election out;
  out.candidates = e.candidates;
  out.domain = e.domain;
  out.voters.resize(static_cast<Index>(voters.size()), e.num_issues());
  for (Index r = 0; r < out.voters.rows(); ++r)
    out.voters.row(r) = e.voters.row(voters[static_cast<std::size_t>(r)]);
  return out;
}

}  // namespace

PolyAnswer single_issue_win(const Election& e) {
  require_regime(e, 1, "single_issue_win");
  const Index m = e.num_candidates();
  for (Index k = 0; k < e.num_issues(); ++k) {
    if (e.candidates(0, k) == e.voters(0, k))
      return {true, IssueSet::single(static_cast<int>(k) + 1)};
    bool rival_agrees = false;
    for (Index i = 1; i < m && !rival_agrees; ++i)
      rival_agrees = e.candidates(i, k) == e.voters(0, k);
    if (!rival_agrees)
      return {true, IssueSet::single(static_cast<int>(k) + 1)};
  }
  return {false, std::nullopt};
}

PolyAnswer agree_on_issues(const Election& e) {
  require_regime(e, 1, "agree_on_issues");
  std::vector<int> agree;
  for (Index k = 0; k < e.num_issues(); ++k)
    if (e.candidates(0, k) == e.voters(0, k))
      agree.push_back(static_cast<int>(k) + 1);
  if (agree.empty()) return {false, std::nullopt};
  IssueSet s(std::move(agree));
  // Target distance on s is zero; a rival loses strictly iff it disagrees
  // with the voter somewhere in s.
  for (Index i = 1; i < e.num_candidates(); ++i) {
    bool disagrees = false;
    for (int k : s.members())
      if (e.candidates(i, k - 1) != e.voters(0, k - 1)) {
        disagrees = true;
        break;
      }
    if (!disagrees) return {false, std::nullopt};
  }
  return {true, std::move(s)};
}

PolyAnswer two_voter_best_case(const Election& e) {
  require_regime(e, 2, "two_voter_best_case");
  for (Index j = 0; j < 2; ++j) {
    PolyAnswer one = single_issue_win(sub_election(e, {j}));
    if (one.decision) return one;  // a 1-1 split already wins best case
  }
  return {false, std::nullopt};
}

PolyAnswer two_voter_worst_case(const Election& e) {
  require_regime(e, 2, "two_voter_worst_case");
  const Election norm = normalize_binary(e);
  std::vector<int> agree;  // issues where the target agrees with both voters
  for (Index k = 0; k < norm.num_issues(); ++k)
    if (norm.voters(0, k) == 1 && norm.voters(1, k) == 1)
      agree.push_back(static_cast<int>(k) + 1);
  if (agree.empty()) return {false, std::nullopt};
  IssueSet s(std::move(agree));
  // Both voters sit at distance zero from the target on s; every rival must
  // lose strictly, i.e. must carry a zero somewhere in s.
  for (Index i = 1; i < norm.num_candidates(); ++i) {
    bool has_zero = false;
    for (int k : s.members())
      if (norm.candidates(i, k - 1) == 0) {
        has_zero = true;
        break;
      }
    if (!has_zero) return {false, std::nullopt};
  }
  return {true, std::move(s)};
}

PolyAnswer three_voter_worst_case(const Election& e) {
  require_regime(e, 3, "three_voter_worst_case");
  constexpr Index pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pair : pairs) {
    PolyAnswer two = two_voter_worst_case(sub_election(e, {pair[0], pair[1]}));
    if (two.decision) return two;  // two strict supporters beat any split
  }
  return {false, std::nullopt};
}

SolveOutcome best_single_issue(const Election& e, NormOrder norm,
                               TieRule tie) {
  const auto tables = detail::prepare_tables(e, norm);
  int best = -1;
  int best_k = 0;
  std::visit(
      [&](const auto& vt) {
        for (int k = 0; k < static_cast<int>(vt.l); ++k) {
          const int sup = vt.support(std::uint32_t{1} << k, tie);
          if (sup > best) {
            best = sup;
            best_k = k;
          }
        }
      },
      tables);
  return outcome_for(e, IssueSet::single(best_k + 1), norm, tie);
}

}  // namespace isel
