#pragma once

#include "isel/election.hpp"
#include "isel/subsets.hpp"

#include <bit>
#include <cstdint>
#include <variant>
#include <vector>

namespace isel::detail {

// Per-voter integer distance powers under a shared per-voter scale, so vote
// decisions reduce to integer comparisons. Binary elections use machine
// integers (distances are disagreement counts regardless of p); everything
// else scales the exact rational powers by per-voter common denominators.
template <class Int>
struct VoteTables {
  Index m = 0, n = 0, l = 0;
  std::vector<Mat<Int>> dist;  // dist[j] is m x l

  int support(std::uint32_t mask, TieRule tie) const {
    int count = 0;
    for (Index j = 0; j < n; ++j) {
      const Mat<Int>& d = dist[static_cast<std::size_t>(j)];
      Int target = Int(0);
      for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1)
        target += d(0, std::countr_zero(bits));
      bool votes_target = true;
      for (Index i = 1; i < m && votes_target; ++i) {
        Int rival = Int(0);
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1)
          rival += d(i, std::countr_zero(bits));
        votes_target =
            tie == TieRule::BestCase ? !(rival < target) : target < rival;
      }
      if (votes_target) ++count;
    }
    return count;
  }

  Eigen::VectorXi tally(std::uint32_t mask, TieRule tie) const {
    Eigen::VectorXi votes = Eigen::VectorXi::Zero(m);
    std::vector<Int> d(static_cast<std::size_t>(m));
    for (Index j = 0; j < n; ++j) {
      const Mat<Int>& row = dist[static_cast<std::size_t>(j)];
      for (Index i = 0; i < m; ++i) {
        Int total = Int(0);
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1)
          total += row(i, std::countr_zero(bits));
        d[static_cast<std::size_t>(i)] = std::move(total);
      }
      ++votes[voted_candidate(d, tie)];
    }
    return votes;
  }

  bool target_wins(std::uint32_t mask, TieRule tie) const {
    return winner_is_target(tally(mask, tie), tie);
  }
};

using BinaryTables = VoteTables<std::int64_t>;
using RealTables = VoteTables<BigInt>;
using AnyTables = std::variant<BinaryTables, RealTables>;

AnyTables prepare_tables(const Election& e, NormOrder norm);

// Margins (rival distance minus target distance) per rival, stored
// column-accessible for incremental subset scans.
template <class Int>
struct MarginColumns {
  Index rivals = 0, n = 0, l = 0;
  std::vector<Mat<Int>> margin;  // margin[r] is n x l

  static MarginColumns from(const VoteTables<Int>& vt) {
    MarginColumns mc;
    mc.rivals = vt.m - 1;
    mc.n = vt.n;
    mc.l = vt.l;
    mc.margin.reserve(static_cast<std::size_t>(mc.rivals));
    for (Index r = 0; r < mc.rivals; ++r) {
      Mat<Int> rows(mc.n, mc.l);
      for (Index j = 0; j < mc.n; ++j)
        for (Index k = 0; k < mc.l; ++k)
          rows(j, k) = vt.dist[static_cast<std::size_t>(j)](r + 1, k) -
                       vt.dist[static_cast<std::size_t>(j)](0, k);
      mc.margin.push_back(std::move(rows));
    }
    return mc;
  }

  // sums is n x rivals of running margin sums for the current subset.
  int support_from_sums(const Mat<Int>& sums, TieRule tie) const {
    int count = 0;
    for (Index j = 0; j < n; ++j) {
      bool votes_target = true;
      for (Index r = 0; r < rivals && votes_target; ++r) {
        votes_target = tie == TieRule::BestCase ? !(sums(j, r) < Int(0))
                                                : Int(0) < sums(j, r);
      }
      if (votes_target) ++count;
    }
    return count;
  }
};

// Scales each row by the least common multiple of its denominators;
// sign tests of partial row sums are unchanged.
Mat<BigInt> scale_rows_to_integers(const RatMat& m);

}  // namespace isel::detail
