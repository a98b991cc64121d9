#pragma once

// Test-only reference implementations, deliberately independent of the
// library's algorithm paths: Bellman-Ford distances, direct evaluation of
// the sketch membership rule from a distance table, and exhaustive
// influence maximization.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "revrank/graph.hpp"
#include "revrank/rank_assignment.hpp"
#include "revrank/types.hpp"

namespace revrank::testing {

inline std::vector<double> bellman_ford(const Graph& g, NodeId source,
                                        bool use_transpose = false) {
  std::vector<double> dist(g.node_count(), kUnreachable);
  dist[source] = 0.0;
  for (std::size_t round = 0; round + 1 < g.node_count(); ++round) {
    bool changed = false;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (is_unreachable(dist[v])) continue;
      for (const Arc& a : g.arcs(v, use_transpose)) {
        if (dist[v] + a.length < dist[a.to]) {
          dist[a.to] = dist[v] + a.length;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return dist;
}

// dist[i][j] = distance from i to j.
inline std::vector<std::vector<double>> all_pairs(const Graph& g) {
  std::vector<std::vector<double>> table;
  table.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v)
    table.push_back(bellman_ford(g, v));
  return table;
}

// Exact strict/closed rankee-ball sizes of node i at distance d, counted
// from a distance table row.
inline std::pair<std::uint64_t, std::uint64_t> ball_counts(
    const Graph& g, const std::vector<double>& dist_from_i, double d) {
  std::uint64_t strict = 0, closed = 0;
  for (NodeId u : g.rankees()) {
    if (is_unreachable(dist_from_i[u])) continue;
    if (dist_from_i[u] < d) ++strict;
    if (dist_from_i[u] <= d) ++closed;
  }
  return {strict, closed};
}

struct RuleSketch {
  std::vector<NodeId> members;
  std::vector<NodeId> auxiliary;
};

// Evaluates the sketch membership rule for node i directly from a distance
// table: rankee j belongs iff r(j) is at most the k-th smallest r value
// within the closed ball of radius d(i,j). Auxiliary entries are the
// rankees that become the k-th smallest within some member's ball once that
// member is removed.
inline RuleSketch rule_sketch(const Graph& g,
                              const std::vector<std::vector<double>>& dist,
                              NodeId i, std::uint32_t k,
                              const RankAssignment& ranks) {
  auto r_less = [&](NodeId a, NodeId b) {
    if (ranks.r(a) != ranks.r(b)) return ranks.r(a) < ranks.r(b);
    return a < b;
  };
  auto reaches = [&](NodeId j) { return !is_unreachable(dist[i][j]); };

  // kth_or_null: k-th smallest (by r) of the given rankees, or none when
  // fewer than k (the supremum, under which every candidate passes).
  auto kth = [&](std::vector<NodeId> ball) -> std::optional<NodeId> {
    if (ball.size() < k) return std::nullopt;
    std::nth_element(ball.begin(), ball.begin() + (k - 1), ball.end(), r_less);
    return ball[k - 1];
  };

  RuleSketch out;
  for (NodeId j : g.rankees()) {
    if (!reaches(j)) continue;
    std::vector<NodeId> ball;
    for (NodeId h : g.rankees())
      if (reaches(h) && dist[i][h] <= dist[i][j]) ball.push_back(h);
    auto threshold = kth(ball);
    if (!threshold || !r_less(*threshold, j)) out.members.push_back(j);
  }

  std::set<NodeId> member_set(out.members.begin(), out.members.end());
  std::set<NodeId> aux_set;
  for (NodeId z : out.members) {
    std::vector<NodeId> ball;
    for (NodeId h : g.rankees())
      if (reaches(h) && h != z && dist[i][h] <= dist[i][z]) ball.push_back(h);
    auto threshold = kth(ball);
    if (threshold && !member_set.count(*threshold))
      aux_set.insert(*threshold);
  }
  out.auxiliary.assign(aux_set.begin(), aux_set.end());
  return out;
}

// Exact influence of a seed set via ball counting (upper rank mode).
inline std::uint64_t brute_influence(
    const Graph& g, const std::vector<std::vector<double>>& dist,
    const std::vector<NodeId>& seeds, std::uint64_t T) {
  std::uint64_t covered = 0;
  for (NodeId z : g.rankers()) {
    bool in = false;
    for (NodeId s : seeds) {
      if (is_unreachable(dist[z][s])) continue;
      auto [strict, closed] = ball_counts(g, dist[z], dist[z][s]);
      (void)strict;
      if (closed <= T) {
        in = true;
        break;
      }
    }
    if (in) ++covered;
  }
  return covered;
}

// Best influence achievable with exactly s seeds, by full enumeration.
inline std::uint64_t optimum_influence(
    const Graph& g, const std::vector<std::vector<double>>& dist,
    std::size_t s, std::uint64_t T) {
  const auto& rankees = g.rankees();
  std::vector<std::size_t> idx(s);
  std::vector<NodeId> seeds(s);
  std::uint64_t best = 0;
  // Enumerate s-subsets of the rankees.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                          std::size_t from) {
    if (pos == s) {
      best = std::max(best, brute_influence(g, dist, seeds, T));
      return;
    }
    for (std::size_t i = from; i < rankees.size(); ++i) {
      seeds[pos] = rankees[i];
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace revrank::testing
