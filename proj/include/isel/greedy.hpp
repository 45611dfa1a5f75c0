#pragma once

#include "isel/election.hpp"

#include <utility>
#include <vector>

namespace isel {

// Accepted greedy steps: issue added (1-based) and support after adding it.
struct GreedyTrace {
  std::vector<std::pair<int, int>> steps;
};

/// Starts from the best single issue, then repeatedly adds the unchosen
/// issue with the largest strict support increase (lowest index on ties),
/// stopping when no addition strictly improves support.
SolveOutcome greedy_max_support(const Election& e, NormOrder norm, TieRule tie,
                                GreedyTrace* trace = nullptr);

}  // namespace isel
