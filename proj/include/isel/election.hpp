#pragma once

#include "isel/errors.hpp"
#include "isel/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace isel {

enum class Domain { Real, Binary };

// Best case resolves every tie (a voter's shortlist and the winner
// decision) toward the target candidate; worst case resolves them against
// it.
enum class TieRule { BestCase, WorstCase };

// Order of the l_p norm used to compare restricted positions.
struct NormOrder {
  int p = 1;
};

/// Nonempty set of 1-based issue indices, kept sorted and duplicate-free.
class IssueSet {
 public:
  explicit IssueSet(std::vector<int> members);
  static IssueSet single(int issue) { return IssueSet({issue}); }
  static IssueSet from_mask(std::uint32_t mask);
  static IssueSet full(int num_issues);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  int max_issue() const { return members_.back(); }
  bool contains(int issue) const;
  std::uint32_t mask() const;  // bit k-1 set iff issue k is a member

  friend bool operator==(const IssueSet&, const IssueSet&) = default;

 private:
  std::vector<int> members_;
};

std::ostream& operator<<(std::ostream& os, const IssueSet& s);

/// Spatial election: positions of m candidates and n voters on l issues.
/// Row 0 of `candidates` is the target candidate by convention.
struct Election {
  RatMat candidates;  // m x l
  RatMat voters;      // n x l
  Domain domain = Domain::Real;

  Index num_candidates() const { return candidates.rows(); }
  Index num_voters() const { return voters.rows(); }
  Index num_issues() const { return candidates.cols(); }
};

/// Throws UsageError unless m >= 2, n >= 1, l >= 1, shapes agree, and
/// binary elections contain only 0/1 entries.
void validate(const Election& e);

struct SolveOutcome {
  IssueSet issue_set;
  Eigen::VectorXi votes;  // per-candidate counts, sums to n
  int target_support = 0;
  bool target_wins = false;
};

/// p-th power of the restricted l_p distance between voter j and candidate
/// i: sum over issues in s of |c_ik - v_jk|^p. Rational, order-preserving.
Rational restricted_distance(const Election& e, Index voter, Index candidate,
                             const IssueSet& s, NormOrder norm);

/// The candidate a voter with the given comparable distance values
/// supports. Best case hands ties on the shortlist to the target; worst
/// case hands them to the lowest-index rival in the shortlist.
template <class Seq>
Index voted_candidate(const Seq& dist, TieRule tie) {
  const Index m = static_cast<Index>(dist.size());
  auto min_value = dist[0];
  for (Index i = 1; i < m; ++i)
    if (dist[i] < min_value) min_value = dist[i];
  if (tie == TieRule::BestCase && dist[0] == min_value) return 0;
  for (Index i = 1; i < m; ++i)
    if (dist[i] == min_value) return i;
  return 0;  // worst case with the target alone at the minimum
}

/// Winner decision from a tally: best case wins weak majorities of the
/// per-candidate maxima, worst case requires a strict lead over every
/// rival.
bool winner_is_target(const Eigen::VectorXi& votes, TieRule tie);

std::vector<Index> cast_votes(const Election& e, const IssueSet& s,
                              NormOrder norm, TieRule tie);
Eigen::VectorXi tally_votes(const Election& e, const IssueSet& s,
                            NormOrder norm, TieRule tie);
int support(const Election& e, const IssueSet& s, NormOrder norm,
            TieRule tie);
bool target_wins(const Election& e, const IssueSet& s, NormOrder norm,
                 TieRule tie);

/// outcome[r](j, k) = |c_{r+1,k} - v_{jk}|^p - |c_{0k} - v_{jk}|^p: one
/// n x l margin matrix per rival. For two candidates this is the single
/// voter-by-issue margin matrix.
using MarginTensor = std::vector<RatMat>;
MarginTensor margin_tensor(const Election& e, NormOrder norm);

/// Flips every issue column on which the target holds 0, so the target's
/// row becomes all-ones. Binary elections only; agreement counts on every
/// issue subset are preserved.
Election normalize_binary(const Election& e);

/// Assembles the full outcome (votes, support, win flag) for a given set.
SolveOutcome outcome_for(const Election& e, const IssueSet& s, NormOrder norm,
                         TieRule tie);

}  // namespace isel
