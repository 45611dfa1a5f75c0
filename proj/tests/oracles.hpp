#pragma once

// Brute-force reference implementations for tests. These re-derive
// everything from definitions (rational arithmetic, explicit tie handling)
// and stay independent of the library's table-based evaluation paths.

#include "isel/election.hpp"
#include "isel/reductions.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace isel::testing {

int naive_support(const Election& e, const IssueSet& s, NormOrder norm,
                  TieRule tie);
bool naive_target_wins(const Election& e, const IssueSet& s, NormOrder norm,
                       TieRule tie);

// Subset scan in canonical order (size, then lexicographic member list),
// built by sorting explicit member vectors.
std::optional<IssueSet> naive_isc(const Election& e, NormOrder norm,
                                  TieRule tie);
int naive_max_support(const Election& e, NormOrder norm, TieRule tie,
                      IssueSet* argmax = nullptr);

bool brute_ilp_satisfiable(const ZeroOneIlp& src);
int brute_mis(const Graph& g);
bool brute_x3c(const X3cInstance& src);
bool brute_hitting_set(const HittingSetInstance& src);

// Binary election from packed bits: row-major candidate bits, then voter
// bits, least significant bit first.
Election binary_election_from_bits(std::uint64_t candidate_bits, Index m,
                                   std::uint64_t voter_bits, Index n, Index l);

Election make_binary(const std::vector<std::vector<int>>& candidates,
                     const std::vector<std::vector<int>>& voters);
Election make_real(const std::vector<std::vector<Rational>>& candidates,
                   const std::vector<std::vector<Rational>>& voters);
RatMat rat_matrix(const std::vector<std::vector<Rational>>& rows);

// Coefficient-wise comparisons (Eigen's operator== does not instantiate
// cleanly for multiprecision scalars under this Boost release).
bool mats_equal(const RatMat& a, const RatMat& b);
bool mat_is_zero(const RatMat& m);

}  // namespace isel::testing
