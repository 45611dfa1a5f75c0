#include "isel/generators.hpp"

#include "isel/errors.hpp"

namespace isel {
namespace {

// Stream tags. Separate streams per role keep candidate draws unchanged
// when the voter count grows.
constexpr std::uint64_t kCovarianceStream = 1;
constexpr std::uint64_t kCandidateStream = 2;
constexpr std::uint64_t kVoterStream = 3;
constexpr std::uint64_t kTreeStream = 4;

void check_config(const GenConfig& cfg) {
  if (cfg.m < 2) throw UsageError("need at least two candidates");
  if (cfg.n < 1) throw UsageError("need at least one voter");
  if (cfg.l < 1) throw UsageError("need at least one issue");
}

}  // namespace

WeightedDecisionTree WeightedDecisionTree::random(Index levels,
                                                  SplitMix64& rng) {
  if (levels < 1 || levels > 24)
    throw UsageError("decision tree supports 1..24 levels");
  WeightedDecisionTree tree;
  tree.levels = levels;
  tree.weights.resize((std::size_t{1} << levels) - 1);
  for (double& w : tree.weights) w = rng.next_unit();
  return tree;
}

std::vector<int> WeightedDecisionTree::sample_walk(SplitMix64& rng) const {
  if (weights.size() != (std::size_t{1} << levels) - 1)
    throw UsageError("decision tree weight count mismatch");
  std::vector<int> bits(static_cast<std::size_t>(levels));
  std::size_t vertex = 1;  // heap indexing from 1
  for (Index step = 0; step < levels; ++step) {
    const int bit = rng.next_unit() < weights[vertex - 1] ? 1 : 0;
    bits[static_cast<std::size_t>(step)] = bit;
    vertex = 2 * vertex + static_cast<std::size_t>(bit);
  }
  return bits;
}

Election gen_gaussian(const GenConfig& cfg) {
  check_config(cfg);
  NormalStream cov_stream(mix_seed(cfg.seed, kCovarianceStream));
  Mat<double> factor(cfg.l, cfg.l);
  for (Index r = 0; r < cfg.l; ++r)
    for (Index c = 0; c < cfg.l; ++c) factor(r, c) = cov_stream.next();

  auto draw_rows = [&](Index rows, std::uint64_t tag) {
    NormalStream stream(mix_seed(cfg.seed, tag));
    RatMat out(rows, cfg.l);
    Vec<double> z(cfg.l);
    for (Index r = 0; r < rows; ++r) {
      for (Index k = 0; k < cfg.l; ++k) z[k] = stream.next();
      const Vec<double> position = factor * z;  // covariance factor * N(0, I)
      for (Index k = 0; k < cfg.l; ++k)
        out(r, k) = rational_from_double(position[k]);
    }
    return out;
  };

  Election e;
  e.domain = Domain::Real;
  e.candidates = draw_rows(cfg.m, kCandidateStream);
  e.voters = draw_rows(cfg.n, kVoterStream);
  return e;
}

Election election_from_tree(const WeightedDecisionTree& tree, Index m, Index n,
                            std::uint64_t seed) {
  if (m < 2 || n < 1) throw UsageError("need m >= 2 candidates, n >= 1 voters");
  auto draw_rows = [&](Index rows, std::uint64_t tag) {
    SplitMix64 stream(mix_seed(seed, tag));
    RatMat out(rows, tree.levels);
    for (Index r = 0; r < rows; ++r) {
      const std::vector<int> bits = tree.sample_walk(stream);
      for (Index k = 0; k < tree.levels; ++k)
        out(r, k) = bits[static_cast<std::size_t>(k)];
    }
    return out;
  };
  Election e;
  e.domain = Domain::Binary;
  e.candidates = draw_rows(m, kCandidateStream);
  e.voters = draw_rows(n, kVoterStream);
  return e;
}

Election gen_tree_binary(const GenConfig& cfg) {
  check_config(cfg);
  if (cfg.l > 24)
    throw UsageError("tree generator supports at most 24 issues");
  SplitMix64 tree_stream(mix_seed(cfg.seed, kTreeStream));
  const WeightedDecisionTree tree =
      WeightedDecisionTree::random(cfg.l, tree_stream);
  return election_from_tree(tree, cfg.m, cfg.n, cfg.seed);
}

Election generate(const GenConfig& cfg) {
  return cfg.kind == GenKind::Gaussian ? gen_gaussian(cfg)
                                       : gen_tree_binary(cfg);
}

}  // namespace isel
