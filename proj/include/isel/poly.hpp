#pragma once

#include "isel/election.hpp"

#include <optional>

namespace isel {

struct PolyAnswer {
  bool decision = false;
  std::optional<IssueSet> witness;  // present when decision holds
};

/// Single binary voter, best-case ties: scans issues in order for one where
/// the target agrees with the voter, or where no rival does.
PolyAnswer single_issue_win(const Election& e);

/// Single binary voter, worst-case ties: the target wins iff it strictly
/// beats every rival on the set of issues where it agrees with the voter.
PolyAnswer agree_on_issues(const Election& e);

/// Two binary voters, best-case ties: one voter won via a single issue
/// carries the election (a 1-1 split resolves to the target).
PolyAnswer two_voter_best_case(const Election& e);

/// Two binary voters, worst-case ties: both voters must strictly prefer the
/// target on the issues where it agrees with both.
PolyAnswer two_voter_worst_case(const Election& e);

/// Three binary voters, worst-case ties: some pair of voters must be won
/// strictly; two strict supporters beat any split of the third vote.
PolyAnswer three_voter_worst_case(const Election& e);

/// Picks the single issue maximizing target support (lowest index on ties).
/// Within two-candidate binary elections this is a 1/2-approximation of the
/// support optimum under both tie rules; usable as a baseline elsewhere.
SolveOutcome best_single_issue(const Election& e, NormOrder norm, TieRule tie);

}  // namespace isel
