#include "isel/poly.hpp"

#include "isel/exact.hpp"
#include "isel/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace isel;
using namespace isel::testing;

TEST_CASE("single issue win scans for agreement or isolation") {
  // Target agrees with the voter on issue 2.
  PolyAnswer a = single_issue_win(make_binary({{0, 0}, {1, 1}}, {{1, 0}}));
  CHECK(a.decision);
  CHECK(*a.witness == IssueSet({2}));

  // No rival agrees with the voter on issue 1.
  a = single_issue_win(make_binary({{0}, {0}}, {{1}}));
  CHECK(a.decision);
  CHECK(*a.witness == IssueSet({1}));

  // Every issue fails both conditions, and exhaustion confirms the loss.
  const Election lost = make_binary({{0, 0}, {1, 0}, {0, 1}}, {{1, 1}});
  a = single_issue_win(lost);
  CHECK_FALSE(a.decision);
  CHECK_FALSE(
      solve_isc_exhaustive(lost, NormOrder{1}, TieRule::BestCase).has_value());
}

TEST_CASE("agree on issues decides the worst-case single voter") {
  PolyAnswer a = agree_on_issues(make_binary({{1, 0}, {0, 1}}, {{1, 1}}));
  CHECK(a.decision);
  CHECK(*a.witness == IssueSet({1}));

  // A rival duplicating the target keeps every comparison tied.
  a = agree_on_issues(make_binary({{1}, {1}}, {{1}}));
  CHECK_FALSE(a.decision);

  a = agree_on_issues(make_binary({{1, 1, 1}, {0, 0, 0}}, {{1, 0, 1}}));
  CHECK(a.decision);
  CHECK(*a.witness == IssueSet({1, 3}));
}

TEST_CASE("two-voter best case reuses the single-voter scan") {
  PolyAnswer a = two_voter_best_case(make_binary({{1}, {0}}, {{1}, {0}}));
  CHECK(a.decision);

  a = two_voter_best_case(make_binary({{0, 0}, {1, 1}}, {{1, 0}, {0, 1}}));
  CHECK(a.decision);
  CHECK(*a.witness == IssueSet({2}));

  // The losing single-voter profile, duplicated, still loses.
  const Election both_lost =
      make_binary({{0, 0}, {1, 0}, {0, 1}}, {{1, 1}, {1, 1}});
  a = two_voter_best_case(both_lost);
  CHECK_FALSE(a.decision);
  CHECK_FALSE(solve_isc_exhaustive(both_lost, NormOrder{1}, TieRule::BestCase)
                  .has_value());
}

TEST_CASE("two-voter worst case needs both voters strictly") {
  PolyAnswer a =
      two_voter_worst_case(make_binary({{1, 1}, {0, 0}}, {{1, 1}, {1, 1}}));
  CHECK(a.decision);
  CHECK(*a.witness == IssueSet({1, 2}));

  const Election split =
      make_binary({{1, 1}, {0, 0}}, {{1, 0}, {0, 1}});
  a = two_voter_worst_case(split);
  CHECK_FALSE(a.decision);
  CHECK_FALSE(solve_isc_exhaustive(split, NormOrder{1}, TieRule::WorstCase)
                  .has_value());

  a = two_voter_worst_case(make_binary({{1, 1}, {0, 1}}, {{1, 0}, {1, 0}}));
  CHECK(a.decision);
  CHECK(*a.witness == IssueSet({1}));
}

TEST_CASE("three-voter worst case wins through a voter pair") {
  PolyAnswer a = three_voter_worst_case(
      make_binary({{1, 0}, {0, 1}}, {{1, 0}, {1, 0}, {1, 0}}));
  CHECK(a.decision);

  a = three_voter_worst_case(make_binary({{1}, {0}}, {{1}, {1}, {0}}));
  CHECK(a.decision);
  CHECK(*a.witness == IssueSet({1}));

  // Mutually disagreeing voters share no agreed issue in any pair.
  const Election scattered = make_binary(
      {{1, 1, 1}, {0, 0, 0}}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  a = three_voter_worst_case(scattered);
  CHECK_FALSE(a.decision);
  CHECK_FALSE(solve_isc_exhaustive(scattered, NormOrder{1},
                                   TieRule::WorstCase)
                  .has_value());
}

TEST_CASE("best single issue picks the largest capture") {
  const Election e = make_binary({{1, 1}, {0, 0}}, {{1, 0}, {1, 0}, {0, 1}});
  const SolveOutcome worst =
      best_single_issue(e, NormOrder{1}, TieRule::WorstCase);
  CHECK(worst.issue_set == IssueSet({1}));
  CHECK(worst.target_support == 2);

  const Election unanimous = make_binary({{1, 0}, {0, 1}}, {{1, 0}, {1, 0}});
  CHECK(best_single_issue(unanimous, NormOrder{1}, TieRule::BestCase)
            .target_support == 2);

  // A rival agreeing with the target on an issue ties every voter there,
  // and best-case ties capture all of them.
  const Election shared = make_binary({{1, 0}, {1, 1}}, {{0, 1}, {0, 0}});
  const SolveOutcome best =
      best_single_issue(shared, NormOrder{1}, TieRule::BestCase);
  CHECK(best.target_support == 2);
  CHECK(best.issue_set == IssueSet({1}));
}

TEST_CASE("poly algorithm preconditions are enforced") {
  const Election two = make_binary({{1}, {0}}, {{1}, {0}});
  CHECK_THROWS_AS(single_issue_win(two), UsageError);
  CHECK_THROWS_AS(agree_on_issues(two), UsageError);
  CHECK_THROWS_AS(three_voter_worst_case(two), UsageError);
  const Election real =
      make_real({{Rational(1)}, {Rational(0)}}, {{Rational(1)}});
  CHECK_THROWS_AS(single_issue_win(real), UsageError);
}

TEST_CASE("poly algorithms match exhaustion on small binary sweeps") {
  // Full sweep over l <= 2, m <= 3 within each regime; the acceptance
  // suite extends this to l <= 3.
  for (Index m : {2, 3}) {
    for (Index l : {1, 2}) {
      for (Index n : {1, 2, 3}) {
        const std::uint64_t cand_patterns = std::uint64_t{1} << (m * l);
        const std::uint64_t voter_patterns = std::uint64_t{1} << (n * l);
        for (std::uint64_t cb = 0; cb < cand_patterns; ++cb)
          for (std::uint64_t vb = 0; vb < voter_patterns; ++vb) {
            const Election e = binary_election_from_bits(cb, m, vb, n, l);
            if (n == 1) {
              const bool best =
                  solve_isc_exhaustive(e, NormOrder{1}, TieRule::BestCase)
                      .has_value();
              const bool worst =
                  solve_isc_exhaustive(e, NormOrder{1}, TieRule::WorstCase)
                      .has_value();
              const PolyAnswer siw = single_issue_win(e);
              const PolyAnswer aoi = agree_on_issues(e);
              REQUIRE(siw.decision == best);
              REQUIRE(aoi.decision == worst);
              if (siw.decision)
                REQUIRE(target_wins(e, *siw.witness, NormOrder{1},
                                    TieRule::BestCase));
              if (aoi.decision)
                REQUIRE(target_wins(e, *aoi.witness, NormOrder{1},
                                    TieRule::WorstCase));
            } else if (n == 2) {
              const PolyAnswer bc = two_voter_best_case(e);
              const PolyAnswer wc = two_voter_worst_case(e);
              REQUIRE(bc.decision ==
                      solve_isc_exhaustive(e, NormOrder{1}, TieRule::BestCase)
                          .has_value());
              REQUIRE(wc.decision ==
                      solve_isc_exhaustive(e, NormOrder{1}, TieRule::WorstCase)
                          .has_value());
              if (bc.decision)
                REQUIRE(target_wins(e, *bc.witness, NormOrder{1},
                                    TieRule::BestCase));
              if (wc.decision)
                REQUIRE(target_wins(e, *wc.witness, NormOrder{1},
                                    TieRule::WorstCase));
            } else {
              const PolyAnswer wc = three_voter_worst_case(e);
              REQUIRE(wc.decision ==
                      solve_isc_exhaustive(e, NormOrder{1}, TieRule::WorstCase)
                          .has_value());
              if (wc.decision)
                REQUIRE(target_wins(e, *wc.witness, NormOrder{1},
                                    TieRule::WorstCase));
            }
          }
      }
    }
  }
}

TEST_CASE("best single issue achieves half the optimum on two candidates") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = 1 + static_cast<Index>(rng.next() % 6);
    const Index l = 1 + static_cast<Index>(rng.next() % 5);
    Election e;
    e.domain = Domain::Binary;
    e.candidates.resize(2, l);
    e.voters.resize(n, l);
    for (Index r = 0; r < 2; ++r)
      for (Index k = 0; k < l; ++k)
        e.candidates(r, k) = rng.next() & 1 ? 1 : 0;
    for (Index r = 0; r < n; ++r)
      for (Index k = 0; k < l; ++k) e.voters(r, k) = rng.next() & 1 ? 1 : 0;
    for (TieRule tie : {TieRule::BestCase, TieRule::WorstCase}) {
      const int opt =
          solve_maxsupport_exhaustive(e, NormOrder{1}, tie).target_support;
      const int bsi = best_single_issue(e, NormOrder{1}, tie).target_support;
      CHECK(2 * bsi >= opt);
      CHECK(bsi <= opt);
    }
  }
}
