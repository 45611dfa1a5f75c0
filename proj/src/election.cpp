#include "isel/election.hpp"

#include <algorithm>
#include <ostream>

namespace isel {
namespace {

void check_norm(NormOrder norm) {
  if (norm.p < 1) throw UsageError("norm order must be >= 1");
}

void check_issue_set(const Election& e, const IssueSet& s) {
  if (s.max_issue() > e.num_issues())
    throw UsageError("issue set exceeds the election's issue count");
}

}  // namespace

IssueSet::IssueSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw UsageError("issue set must be nonempty");
  if (members_.front() < 1) throw UsageError("issue indices are 1-based");
}

IssueSet IssueSet::from_mask(std::uint32_t mask) {
  std::vector<int> members;
  for (int k = 0; mask != 0; ++k, mask >>= 1)
    if (mask & 1u) members.push_back(k + 1);
  return IssueSet(std::move(members));
}

IssueSet IssueSet::full(int num_issues) {
  std::vector<int> members(static_cast<std::size_t>(num_issues));
  for (int k = 0; k < num_issues; ++k) members[static_cast<std::size_t>(k)] = k + 1;
  return IssueSet(std::move(members));
}

bool IssueSet::contains(int issue) const {
  return std::binary_search(members_.begin(), members_.end(), issue);
}

std::uint32_t IssueSet::mask() const {
  if (members_.back() > 32)
    throw UsageError("issue set does not fit a 32-bit mask");
  std::uint32_t m = 0;
  for (int k : members_) m |= (std::uint32_t{1} << (k - 1));
  return m;
}

std::ostream& operator<<(std::ostream& os, const IssueSet& s) {
  os << '{';
  bool first = true;
  for (int k : s.members()) {
    if (!first) os << ',';
    os << k;
    first = false;
  }
  return os << '}';
}

void validate(const Election& e) {
  if (e.num_candidates() < 2) throw UsageError("need at least two candidates");
  if (e.num_voters() < 1) throw UsageError("need at least one voter");
  if (e.num_issues() < 1) throw UsageError("need at least one issue");
  if (e.voters.cols() != e.candidates.cols())
    throw UsageError("candidate and voter matrices disagree on issue count");
  if (e.domain == Domain::Binary) {
    auto binary = [](const RatMat& m) {
      for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
          if (m(r, c) != 0 && m(r, c) != 1) return false;
      return true;
    };
    if (!binary(e.candidates) || !binary(e.voters))
      throw UsageError("binary election contains entries outside {0,1}");
  }
}

Rational restricted_distance(const Election& e, Index voter, Index candidate,
                             const IssueSet& s, NormOrder norm) {
  check_norm(norm);
  if (voter < 0 || voter >= e.num_voters())
    throw UsageError("voter index out of range");
  if (candidate < 0 || candidate >= e.num_candidates())
    throw UsageError("candidate index out of range");
  check_issue_set(e, s);
  Rational total = 0;
  for (int k : s.members())
    total += pow_abs(e.candidates(candidate, k - 1) - e.voters(voter, k - 1),
                     norm.p);
  return total;
}

bool winner_is_target(const Eigen::VectorXi& votes, TieRule tie) {
  for (Index i = 1; i < votes.size(); ++i) {
    if (tie == TieRule::BestCase ? votes[i] > votes[0] : votes[i] >= votes[0])
      return false;
  }
  return true;
}

std::vector<Index> cast_votes(const Election& e, const IssueSet& s,
                              NormOrder norm, TieRule tie) {
  check_norm(norm);
  check_issue_set(e, s);
  const Index m = e.num_candidates();
  const Index n = e.num_voters();
  std::vector<Index> votes(static_cast<std::size_t>(n));
  std::vector<Rational> dist(static_cast<std::size_t>(m));
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < m; ++i) {
      Rational total = 0;
      for (int k : s.members())
        total += pow_abs(e.candidates(i, k - 1) - e.voters(j, k - 1), norm.p);
      dist[static_cast<std::size_t>(i)] = std::move(total);
    }
    votes[static_cast<std::size_t>(j)] = voted_candidate(dist, tie);
  }
  return votes;
}

Eigen::VectorXi tally_votes(const Election& e, const IssueSet& s,
                            NormOrder norm, TieRule tie) {
  Eigen::VectorXi tally = Eigen::VectorXi::Zero(e.num_candidates());
  for (Index choice : cast_votes(e, s, norm, tie)) ++tally[choice];
  return tally;
}

int support(const Election& e, const IssueSet& s, NormOrder norm,
            TieRule tie) {
  int count = 0;
  for (Index choice : cast_votes(e, s, norm, tie))
    if (choice == 0) ++count;
  return count;
}

bool target_wins(const Election& e, const IssueSet& s, NormOrder norm,
                 TieRule tie) {
  return winner_is_target(tally_votes(e, s, norm, tie), tie);
}

MarginTensor margin_tensor(const Election& e, NormOrder norm) {
  check_norm(norm);
  validate(e);
  const Index m = e.num_candidates();
  const Index n = e.num_voters();
  const Index l = e.num_issues();
  MarginTensor tensor;
  tensor.reserve(static_cast<std::size_t>(m - 1));
  for (Index i = 1; i < m; ++i) {
    RatMat rival(n, l);
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < l; ++k)
        rival(j, k) = pow_abs(e.candidates(i, k) - e.voters(j, k), norm.p) -
                      pow_abs(e.candidates(0, k) - e.voters(j, k), norm.p);
    tensor.push_back(std::move(rival));
  }
  return tensor;
}

Election normalize_binary(const Election& e) {
  if (e.domain != Domain::Binary)
    throw UsageError("normalize_binary expects a binary election");
  validate(e);
  Election out = e;
  for (Index k = 0; k < e.num_issues(); ++k) {
    if (e.candidates(0, k) != 0) continue;
    for (Index i = 0; i < e.num_candidates(); ++i)
      out.candidates(i, k) = Rational(1) - e.candidates(i, k);
    for (Index j = 0; j < e.num_voters(); ++j)
      out.voters(j, k) = Rational(1) - e.voters(j, k);
  }
  return out;
}

SolveOutcome outcome_for(const Election& e, const IssueSet& s, NormOrder norm,
                         TieRule tie) {
  Eigen::VectorXi votes = tally_votes(e, s, norm, tie);
  SolveOutcome outcome{s, votes, votes[0], winner_is_target(votes, tie)};
  return outcome;
}

}  // namespace isel
