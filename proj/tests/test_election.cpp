#include "isel/election.hpp"

#include "isel/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <vector>

using namespace isel;
using namespace isel::testing;

namespace {

// Opening scenario: the target (row 0) opposes everything the rival
// supports; a 3-voter majority also wants the third issue restricted.
Election intro_scenario() {
  return make_binary({{0, 0, 1}, {1, 1, 0}},
                     {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 0}, {1, 1, 0}});
}

Election random_binary(SplitMix64& rng, Index m, Index n, Index l) {
  Election e;
  e.domain = Domain::Binary;
  e.candidates.resize(m, l);
  e.voters.resize(n, l);
  for (Index r = 0; r < m; ++r)
    for (Index k = 0; k < l; ++k) e.candidates(r, k) = rng.next() & 1 ? 1 : 0;
  for (Index r = 0; r < n; ++r)
    for (Index k = 0; k < l; ++k) e.voters(r, k) = rng.next() & 1 ? 1 : 0;
  return e;
}

Election random_real(SplitMix64& rng, Index m, Index n, Index l) {
  Election e;
  e.domain = Domain::Real;
  e.candidates.resize(m, l);
  e.voters.resize(n, l);
  auto draw = [&rng] {
    return Rational(static_cast<int>(rng.next() % 17) - 8,
                    1 + static_cast<int>(rng.next() % 4));
  };
  for (Index r = 0; r < m; ++r)
    for (Index k = 0; k < l; ++k) e.candidates(r, k) = draw();
  for (Index r = 0; r < n; ++r)
    for (Index k = 0; k < l; ++k) e.voters(r, k) = draw();
  return e;
}

}  // namespace

TEST_CASE("issue sets normalize and validate") {
  IssueSet s({3, 1, 3});
  CHECK(s.members() == std::vector<int>{1, 3});
  CHECK(s.mask() == 0b101u);
  CHECK(IssueSet::from_mask(0b101u) == s);
  CHECK_THROWS_AS(IssueSet({}), UsageError);
  CHECK_THROWS_AS(IssueSet({0}), UsageError);
}

TEST_CASE("restricted distance evaluates p-th powers") {
  const Election e = make_real({{Rational(0), Rational(0), Rational(0)},
                                {Rational(1), Rational(1), Rational(2)}},
                               {{Rational(1), Rational(1), Rational(0)},
                                {Rational(1), Rational(0), Rational(1)}});

  // Voter coinciding with a candidate scores zero on any set.
  const Election same = make_real(
      {{Rational(1), Rational(2)}, {Rational(0), Rational(0)}},
      {{Rational(1), Rational(2)}});
  for (int p : {1, 2, 3})
    CHECK(restricted_distance(same, 0, 0, IssueSet({1, 2}), NormOrder{p}) == 0);

  CHECK(restricted_distance(e, 0, 0, IssueSet({1, 2}), NormOrder{2}) == 2);
  CHECK(restricted_distance(e, 1, 0, IssueSet({3}), NormOrder{1}) == 1);

  CHECK_THROWS_AS(restricted_distance(e, 5, 0, IssueSet({1}), NormOrder{1}),
                  UsageError);
  CHECK_THROWS_AS(restricted_distance(e, 0, 7, IssueSet({1}), NormOrder{1}),
                  UsageError);
  CHECK_THROWS_AS(restricted_distance(e, 0, 0, IssueSet({9}), NormOrder{1}),
                  UsageError);
}

TEST_CASE("restricted distance is additive over disjoint sets") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Election e = random_real(rng, 2, 2, 6);
    const int p = 1 + static_cast<int>(rng.next() % 3);
    const std::uint32_t a = 1 + static_cast<std::uint32_t>(rng.next() % 63);
    std::uint32_t b = 1 + static_cast<std::uint32_t>(rng.next() % 63);
    b &= ~a;
    if (b == 0) continue;
    const Rational whole =
        restricted_distance(e, 0, 1, IssueSet::from_mask(a | b), NormOrder{p});
    const Rational parts =
        restricted_distance(e, 0, 1, IssueSet::from_mask(a), NormOrder{p}) +
        restricted_distance(e, 0, 1, IssueSet::from_mask(b), NormOrder{p});
    CHECK(whole == parts);
  }
}

TEST_CASE("cast_votes handles strict preference and exact ties") {
  const Election strict = make_binary({{1}, {0}}, {{1}});
  CHECK(cast_votes(strict, IssueSet({1}), NormOrder{1}, TieRule::BestCase) ==
        std::vector<Index>{0});

  const Election tie =
      make_real({{Rational(1)}, {Rational(0)}}, {{Rational(1, 2)}});
  CHECK(cast_votes(tie, IssueSet({1}), NormOrder{1}, TieRule::BestCase) ==
        std::vector<Index>{0});
  CHECK(cast_votes(tie, IssueSet({1}), NormOrder{1}, TieRule::WorstCase) ==
        std::vector<Index>{1});
}

TEST_CASE("intro scenario: one issue flips the election") {
  const Election e = intro_scenario();
  const IssueSet third({3});
  const auto votes = cast_votes(e, third, NormOrder{1}, TieRule::BestCase);
  for (std::size_t j = 0; j < 3; ++j) CHECK(votes[j] == 0);  // majority
  for (std::size_t j = 3; j < 5; ++j) CHECK(votes[j] == 1);  // minority
  CHECK(support(e, third, NormOrder{1}, TieRule::BestCase) == 3);
  CHECK(target_wins(e, third, NormOrder{1}, TieRule::BestCase));
  CHECK(target_wins(e, third, NormOrder{1}, TieRule::WorstCase));
  // The full issue set loses the election for the target.
  CHECK_FALSE(
      target_wins(e, IssueSet({1, 2, 3}), NormOrder{1}, TieRule::BestCase));
}

TEST_CASE("support counts and winner rules") {
  const Election all_same =
      make_binary({{1, 0}, {0, 1}}, {{1, 0}, {1, 0}, {1, 0}});
  CHECK(support(all_same, IssueSet({1, 2}), NormOrder{1}, TieRule::BestCase) ==
        3);

  const Election two_cand =
      make_binary({{1, 1}, {0, 0}}, {{1, 0}, {1, 0}, {0, 1}});
  CHECK(support(two_cand, IssueSet({1}), NormOrder{1}, TieRule::WorstCase) ==
        2);

  const Election single = make_binary({{1}, {0}}, {{1}});
  CHECK(target_wins(single, IssueSet({1}), NormOrder{1}, TieRule::BestCase));

  const Election split = make_binary({{1}, {0}}, {{1}, {0}});
  CHECK(target_wins(split, IssueSet({1}), NormOrder{1}, TieRule::BestCase));
  CHECK_FALSE(
      target_wins(split, IssueSet({1}), NormOrder{1}, TieRule::WorstCase));
}

TEST_CASE("margin tensor matches its definition") {
  const Election same = make_binary({{1, 0}, {1, 0}, {1, 0}}, {{0, 1}});
  for (const RatMat& rival : margin_tensor(same, NormOrder{2}))
    CHECK(mat_is_zero(rival));

  const Election one =
      make_real({{Rational(0)}, {Rational(1)}}, {{Rational(0)}});
  const MarginTensor a = margin_tensor(one, NormOrder{1});
  REQUIRE(a.size() == 1);
  CHECK(a[0](0, 0) == 1);

  const Election equidistant =
      make_real({{Rational(0)}, {Rational(2)}}, {{Rational(1)}});
  CHECK(margin_tensor(equidistant, NormOrder{2})[0](0, 0) == 0);
}

TEST_CASE("normalize_binary flips columns where the target holds zero") {
  const Election ones = make_binary({{1, 1}, {0, 1}}, {{1, 0}});
  const Election unchanged = normalize_binary(ones);
  CHECK(mats_equal(unchanged.candidates, ones.candidates));
  CHECK(mats_equal(unchanged.voters, ones.voters));

  const Election mixed = make_binary({{0, 1}, {1, 0}}, {{0, 0}});
  const Election flipped = normalize_binary(mixed);
  CHECK(mats_equal(flipped.candidates,
                   make_binary({{1, 1}, {0, 0}}, {{1, 0}}).candidates));
  CHECK(flipped.voters(0, 0) == 1);
  CHECK(flipped.voters(0, 1) == 0);

  const Election real =
      make_real({{Rational(1)}, {Rational(0)}}, {{Rational(1)}});
  CHECK_THROWS_AS(normalize_binary(real), UsageError);
}

TEST_CASE("normalize_binary preserves support on every subset") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Election e = random_binary(rng, 3, 3, 3);
    const Election norm = normalize_binary(e);
    for (std::uint32_t mask = 1; mask < 8; ++mask) {
      const IssueSet s = IssueSet::from_mask(mask);
      for (TieRule tie : {TieRule::BestCase, TieRule::WorstCase})
        CHECK(support(e, s, NormOrder{1}, tie) ==
              support(norm, s, NormOrder{1}, tie));
    }
  }
}

TEST_CASE("voted candidate attains the minimum restricted distance") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const Election e = random_real(rng, 4, 3, 4);
    const int p = 1 + static_cast<int>(rng.next() % 2);
    const std::uint32_t mask = 1 + static_cast<std::uint32_t>(rng.next() % 15);
    const IssueSet s = IssueSet::from_mask(mask);
    for (TieRule tie : {TieRule::BestCase, TieRule::WorstCase}) {
      const auto votes = cast_votes(e, s, NormOrder{p}, tie);
      for (Index j = 0; j < e.num_voters(); ++j) {
        const Rational chosen = restricted_distance(
            e, j, votes[static_cast<std::size_t>(j)], s, NormOrder{p});
        for (Index i = 0; i < e.num_candidates(); ++i)
          CHECK(chosen <= restricted_distance(e, j, i, s, NormOrder{p}));
      }
    }
  }
}

TEST_CASE("best-case support dominates worst-case support") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Election e = random_binary(rng, 3, 4, 4);
    for (std::uint32_t mask = 1; mask < 16; ++mask) {
      const IssueSet s = IssueSet::from_mask(mask);
      CHECK(support(e, s, NormOrder{1}, TieRule::BestCase) >=
            support(e, s, NormOrder{1}, TieRule::WorstCase));
    }
  }
}

TEST_CASE("scaling real positions leaves votes unchanged") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    const Election e = random_real(rng, 3, 3, 3);
    Election scaled = e;
    const Rational factor(1 + static_cast<int>(rng.next() % 5),
                          1 + static_cast<int>(rng.next() % 3));
    scaled.candidates *= factor;
    scaled.voters *= factor;
    const int p = 1 + static_cast<int>(rng.next() % 3);
    for (std::uint32_t mask = 1; mask < 8; ++mask) {
      const IssueSet s = IssueSet::from_mask(mask);
      for (TieRule tie : {TieRule::BestCase, TieRule::WorstCase})
        CHECK(cast_votes(e, s, NormOrder{p}, tie) ==
              cast_votes(scaled, s, NormOrder{p}, tie));
    }
  }
}

TEST_CASE("binary votes ignore the norm order") {
  SplitMix64 rng(47);
  for (int trial = 0; trial < 25; ++trial) {
    const Election e = random_binary(rng, 3, 3, 4);
    for (std::uint32_t mask = 1; mask < 16; ++mask) {
      const IssueSet s = IssueSet::from_mask(mask);
      for (TieRule tie : {TieRule::BestCase, TieRule::WorstCase})
        CHECK(cast_votes(e, s, NormOrder{1}, tie) ==
              cast_votes(e, s, NormOrder{4}, tie));
    }
  }
}

TEST_CASE("library votes agree with the reference derivation") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const Election e = trial % 2 == 0 ? random_real(rng, 3, 3, 3)
                                      : random_binary(rng, 3, 3, 3);
    const int p = 1 + static_cast<int>(rng.next() % 2);
    for (std::uint32_t mask = 1; mask < 8; ++mask) {
      const IssueSet s = IssueSet::from_mask(mask);
      for (TieRule tie : {TieRule::BestCase, TieRule::WorstCase}) {
        CHECK(support(e, s, NormOrder{p}, tie) ==
              naive_support(e, s, NormOrder{p}, tie));
        CHECK(target_wins(e, s, NormOrder{p}, tie) ==
              naive_target_wins(e, s, NormOrder{p}, tie));
      }
    }
  }
}

TEST_CASE("validation rejects malformed elections") {
  Election e = make_binary({{1}, {0}}, {{1}});
  e.candidates(0, 0) = Rational(2);
  CHECK_THROWS_AS(validate(e), UsageError);

  Election lone;
  lone.domain = Domain::Binary;
  lone.candidates = RatMat::Zero(1, 1);
  lone.voters = RatMat::Zero(1, 1);
  CHECK_THROWS_AS(validate(lone), UsageError);
}
