#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "revrank/estimators.hpp"
#include "revrank/graph.hpp"
#include "revrank/reverse_rank.hpp"
#include "revrank/types.hpp"

namespace revrank {

// Decay kernel and ranker weights of a reverse-rank influence function:
// Inf(S) = sum over rankers z of beta(z) * alpha(rank of best seed in S).
struct InfluenceSpec {
  enum class Alpha : std::uint8_t { threshold, reciprocal, table };

  Alpha alpha = Alpha::threshold;
  // Threshold kernel: alpha(x) = 1 for x <= threshold.
  std::uint64_t threshold = 1;
  // Table kernel: alpha(x) = table[ceil(x) - 1], 0 past the end. Must be
  // nonincreasing and nonnegative.
  std::vector<double> table;
  // Per-node ranker weights; empty means weight 1 for every ranker.
  std::vector<double> beta;
  RankMode rank_mode = RankMode::upper;

  static InfluenceSpec threshold_kernel(std::uint64_t T,
                                        RankMode mode = RankMode::upper) {
    InfluenceSpec s;
    s.alpha = Alpha::threshold;
    s.threshold = T;
    s.rank_mode = mode;
    return s;
  }
  static InfluenceSpec reciprocal_kernel(RankMode mode = RankMode::upper) {
    InfluenceSpec s;
    s.alpha = Alpha::reciprocal;
    s.rank_mode = mode;
    return s;
  }

  void validate() const;  // throws std::invalid_argument
  double alpha_at(double rank) const;
  // Largest rank with alpha > 0, when the kernel has bounded support.
  std::optional<double> support_cutoff() const;
};

// Estimated influence of a seed set, computed with one multi-source
// reverse-rank traversal. With a bounded kernel the traversal stops once
// rank estimates pass the support cutoff. Rankers that cannot reach any
// seed contribute nothing.
double estimate_influence(const Graph& g, const EstimationSet& lists,
                          std::span<const NodeId> seeds,
                          const InfluenceSpec& spec);

struct SeedEntry {
  NodeId seed;
  std::uint64_t marginal;  // rankers newly covered when the seed was chosen
};

struct SeedList {
  std::vector<SeedEntry> entries;
  std::uint64_t covered = 0;  // total rankers covered = sum of marginals
};

// Exact greedy influence maximization for the threshold kernel with uniform
// ranker weights: builds coverage sets with one truncated Dijkstra per
// ranker, then repeatedly extracts the seed with maximum residual coverage.
// Stops after max_seeds picks (0 = no limit) or when no seed adds coverage.
SeedList exact_greedy_im(const Graph& g, std::uint64_t T,
                         std::size_t max_seeds = 0,
                         RankMode mode = RankMode::upper);

// Rank and distance of the best covering seed per ranker (infinite until
// covered).
struct BestSeed {
  double rank = kUnreachable;
  double dist = kUnreachable;
  bool covered() const { return !is_unreachable(rank); }
};

struct SkimOptions {
  std::uint64_t T = 1;
  std::uint32_t K = 512;          // sample size per candidate
  std::uint64_t shuffle_seed = 0;
  std::size_t max_seeds = 0;      // 0 = no limit
  // Stop once covered >= coverage_target * |Z| (the crossing seed is kept).
  std::optional<double> coverage_target;
};

struct SkimResult {
  SeedList seeds;
  std::vector<BestSeed> best_seed;  // by node id, state after the last seed
};

// Approximate greedy influence maximization (threshold kernel, uniform
// weights) on the estimated ranks: candidates accumulate samples from
// truncated searches out of random uncovered rankers; the first candidate
// holding K samples becomes the next seed, and its coverage is applied with
// a pruned multi-source reverse-rank search.
SkimResult skim_im(const Graph& g, const EstimationSet& lists,
                   const SkimOptions& options);

}  // namespace revrank
