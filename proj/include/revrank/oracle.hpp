#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "revrank/graph.hpp"
#include "revrank/types.hpp"

namespace revrank {

// Exact rank range a single ranker assigns to every rankee, from one full
// Dijkstra. For a rankee it cannot reach, dist is kUnreachable and the
// range is (number of rankees it reaches, |U|].
struct ExactRankRow {
  NodeId ranker = 0;
  std::vector<double> dist;          // by node id; meaningful for rankees
  std::vector<std::uint64_t> lower;  // strict-neighborhood count
  std::vector<std::uint64_t> upper;  // closed-neighborhood count
};

ExactRankRow exact_ranks_from(const Graph& g, NodeId ranker);

struct ReverseRankEntry {
  NodeId ranker;
  double dist;
  std::uint64_t lower;
  std::uint64_t upper;
};

// The naive reverse-rank solution: a full Dijkstra from every ranker.
// Intended for verification at small scale.
std::vector<ReverseRankEntry> exact_reverse_ranks(const Graph& g,
                                                  NodeId rankee);

// Exact rankee-neighborhood step function of one node: for each distinct
// rankee distance d, the strict and closed ball sizes.
struct NeighborhoodStep {
  double dist;
  std::uint64_t strict_count;
  std::uint64_t closed_count;
};

std::vector<NeighborhoodStep> exact_neighborhood_function(const Graph& g,
                                                          NodeId node);

// Number of rankers whose mode-resolved rank of the best seed is at most T.
// Rankers that reach no seed never count.
std::uint64_t exact_influence(const Graph& g, std::span<const NodeId> seeds,
                              std::uint64_t T, RankMode mode = RankMode::upper);

}  // namespace revrank
