#pragma once

#include "isel/election.hpp"
#include "isel/rng.hpp"

#include <cstdint>
#include <vector>

namespace isel {

enum class GenKind { Gaussian, TreeBinary };

struct GenConfig {
  Index m = 3;
  Index n = 100;
  Index l = 10;
  std::uint64_t seed = 0;
  GenKind kind = GenKind::Gaussian;
};

/// Complete binary tree of 2^levels - 1 decision vertices in heap order,
/// each carrying the probability of emitting 1 (a right move).
struct WeightedDecisionTree {
  Index levels = 0;
  std::vector<double> weights;  // size 2^levels - 1, values in [0, 1]

  static WeightedDecisionTree random(Index levels, SplitMix64& rng);

  /// Root-to-bottom walk across all `levels` decision vertices; returns the
  /// emitted bits.
  std::vector<int> sample_walk(SplitMix64& rng) const;
};

/// Positions drawn from N(0, G G^T) with G a fresh square standard-normal
/// matrix per instance; candidates and voters share the distribution but
/// consume independent streams. Real domain, exact dyadic storage.
Election gen_gaussian(const GenConfig& cfg);

/// Binary belief vectors emitted by random walks over one shared weighted
/// decision tree per instance. Requires l <= 24.
Election gen_tree_binary(const GenConfig& cfg);

/// Walk-based election over an explicit tree (exposed so degenerate weight
/// profiles can be exercised directly).
Election election_from_tree(const WeightedDecisionTree& tree, Index m, Index n,
                            std::uint64_t seed);

Election generate(const GenConfig& cfg);

}  // namespace isel
