#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "revrank/estimators.hpp"
#include "revrank/graph.hpp"
#include "revrank/types.hpp"

namespace revrank {

struct RevRankItem {
  NodeId node;
  double dist;      // distance to the seed set
  double rank_est;  // estimated rank the node assigns to the seed set
};

struct ScanStats {
  std::uint64_t emitted = 0;
  std::uint64_t relaxed_arcs = 0;
};

// Lazy sorted-access traversal: emits nodes in nondecreasing lexicographic
// (rank_est, dist) order while relaxing only arcs adjacent to emitted
// nodes. Structured like Dijkstra on the transpose graph, but prioritized
// by the bottom-k rank estimate with the distance bound as tie breaker;
// remaining ties break by node id.
//
// Requires bottom-k estimation lists: their estimates are nondecreasing
// along shortest paths, which is what makes the emission order correct.
class ReverseRankScan {
 public:
  // rank_cutoff stops the stream at the first item whose estimate exceeds
  // it; that item is not emitted and its arcs are never relaxed.
  ReverseRankScan(const Graph& g, const EstimationSet& lists,
                  std::span<const NodeId> seeds,
                  std::optional<double> rank_cutoff = std::nullopt);

  std::optional<RevRankItem> next();

  // Skips relaxing the arcs of the most recently emitted node. Must be
  // called before the following next().
  void prune_current() { pending_ = std::nullopt; }

  const ScanStats& stats() const { return stats_; }

 private:
  struct QItem {
    double rank_est;
    double dist;
    NodeId node;
    bool operator>(const QItem& o) const {
      if (rank_est != o.rank_est) return rank_est > o.rank_est;
      if (dist != o.dist) return dist > o.dist;
      return node > o.node;
    }
  };

  void relax(NodeId v, double dist_v);

  const Graph& graph_;
  const EstimationSet& lists_;
  std::optional<double> cutoff_;
  std::vector<double> best_dist_;
  std::vector<std::uint8_t> settled_;
  std::vector<QItem> heap_;
  std::optional<RevRankItem> pending_;
  ScanStats stats_;
};

struct RevRankRow {
  NodeId node;
  double dist;
  RankEstimate rank;
};

// Eager convenience wrapper producing (node, dist, rank range) rows. With
// include_unreachable (only valid without a cutoff), nodes that cannot
// reach the seed set are appended with dist = kUnreachable and the range
// (estimated reachable-set size, |U|].
std::vector<RevRankRow> reverse_rank_rows(
    const Graph& g, const EstimationSet& lists, std::span<const NodeId> seeds,
    std::optional<double> rank_cutoff = std::nullopt,
    std::optional<std::size_t> top = std::nullopt,
    bool include_unreachable = false);

}  // namespace revrank
