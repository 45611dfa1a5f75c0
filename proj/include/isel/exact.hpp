#pragma once

#include "isel/election.hpp"
#include "isel/subsets.hpp"

#include <optional>

namespace isel {

/// Decides issue selection control by exhausting nonempty issue subsets in
/// canonical order (size, then lexicographic members) with early exit.
/// Returns the first winning set, or nothing.
std::optional<IssueSet> solve_isc_exhaustive(const Election& e, NormOrder norm,
                                             TieRule tie,
                                             EnumLimits limits = {});

/// Maximizes target support over all nonempty issue subsets; the returned
/// set is the canonical-first argmax.
SolveOutcome solve_maxsupport_exhaustive(const Election& e, NormOrder norm,
                                         TieRule tie, EnumLimits limits = {});

}  // namespace isel
