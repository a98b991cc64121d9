#include "revrank/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace revrank {

ExactRankRow exact_ranks_from(const Graph& g, NodeId ranker) {
  if (ranker >= g.node_count())
    throw std::invalid_argument("exact_ranks_from: ranker id out of range");
  ExactRankRow row;
  row.ranker = ranker;
  DistanceResult sp = dijkstra(g, ranker, /*use_transpose=*/false);
  row.dist = std::move(sp.dist);
  row.lower.assign(g.node_count(), 0);
  row.upper.assign(g.node_count(), 0);

  std::uint64_t reached = 0;
  std::size_t i = 0;
  const auto& order = sp.scan_order;
  while (i < order.size()) {
    double d = row.dist[order[i]];
    std::size_t j = i;
    std::uint64_t in_tier = 0;
    while (j < order.size() && row.dist[order[j]] == d) {
      if (g.is_rankee(order[j])) ++in_tier;
      ++j;
    }
    for (std::size_t t = i; t < j; ++t) {
      NodeId v = order[t];
      row.lower[v] = reached;
      row.upper[v] = reached + in_tier;
    }
    reached += in_tier;
    i = j;
  }
  // reached now holds |R ∩ U|; unreachable rankees get the open range
  // (reached, |U|].
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (is_unreachable(row.dist[v])) {
      row.lower[v] = reached;
      row.upper[v] = g.rankee_count();
    }
  }
  return row;
}

std::vector<ReverseRankEntry> exact_reverse_ranks(const Graph& g,
                                                  NodeId rankee) {
  if (rankee >= g.node_count() || !g.is_rankee(rankee))
    throw std::invalid_argument("exact_reverse_ranks: not a rankee");
  std::vector<ReverseRankEntry> out;
  out.reserve(g.ranker_count());
  for (NodeId z : g.rankers()) {
    ExactRankRow row = exact_ranks_from(g, z);
    out.push_back({z, row.dist[rankee], row.lower[rankee], row.upper[rankee]});
  }
  return out;
}

std::vector<NeighborhoodStep> exact_neighborhood_function(const Graph& g,
                                                          NodeId node) {
  DistanceResult sp = dijkstra(g, node, /*use_transpose=*/false);
  std::vector<NeighborhoodStep> steps;
  std::uint64_t count = 0;
  std::size_t i = 0;
  const auto& order = sp.scan_order;
  while (i < order.size()) {
    double d = sp.dist[order[i]];
    std::uint64_t in_tier = 0;
    while (i < order.size() && sp.dist[order[i]] == d) {
      if (g.is_rankee(order[i])) ++in_tier;
      ++i;
    }
    if (in_tier > 0) {
      steps.push_back({d, count, count + in_tier});
      count += in_tier;
    }
  }
  return steps;
}

std::uint64_t exact_influence(const Graph& g, std::span<const NodeId> seeds,
                              std::uint64_t T, RankMode mode) {
  if (T < 1) throw std::invalid_argument("exact_influence: T must be >= 1");
  for (NodeId s : seeds)
    if (s >= g.node_count() || !g.is_rankee(s))
      throw std::invalid_argument("exact_influence: seed is not a rankee");
  if (seeds.empty()) return 0;

  std::uint64_t covered = 0;
  for (NodeId z : g.rankers()) {
    ExactRankRow row = exact_ranks_from(g, z);
    double best = kUnreachable;
    for (NodeId s : seeds) {
      if (is_unreachable(row.dist[s])) continue;
      best = std::min(best, resolve_rank(static_cast<double>(row.lower[s]),
                                         static_cast<double>(row.upper[s]),
                                         mode));
    }
    if (!is_unreachable(best) && best <= static_cast<double>(T)) ++covered;
  }
  return covered;
}

}  // namespace revrank
