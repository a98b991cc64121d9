#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "revrank/types.hpp"

namespace revrank {

struct Arc {
  NodeId to;
  double length;
};

struct EdgeInput {
  std::uint64_t u;
  std::uint64_t v;
  double length;
};

// Immutable weighted graph with dense node ids in 0..n-1 and a transpose
// view. A subset of nodes may be designated rankees (nodes that receive
// ranks, the set U) and rankers (nodes that assign ranks, the set Z); by
// default every node is both.
class Graph {
 public:
  Graph(std::size_t n, const std::vector<EdgeInput>& edges, bool directed,
        std::vector<std::uint64_t> external_ids = {});

  std::size_t node_count() const { return n_; }
  // Number of stored arcs (an undirected edge is stored as two arcs).
  std::size_t arc_count() const { return out_arcs_.size(); }
  bool directed() const { return directed_; }

  std::span<const Arc> out_arcs(NodeId v) const {
    return {out_arcs_.data() + out_offsets_[v],
            out_offsets_[v + 1] - out_offsets_[v]};
  }
  // Arcs of the transpose graph (arcs into v in the original direction).
  std::span<const Arc> in_arcs(NodeId v) const {
    if (!directed_) return out_arcs(v);
    return {in_arcs_.data() + in_offsets_[v],
            in_offsets_[v + 1] - in_offsets_[v]};
  }
  std::span<const Arc> arcs(NodeId v, bool transpose) const {
    return transpose ? in_arcs(v) : out_arcs(v);
  }

  bool is_rankee(NodeId v) const { return rankee_mask_[v] != 0; }
  bool is_ranker(NodeId v) const { return ranker_mask_[v] != 0; }
  const std::vector<NodeId>& rankees() const { return rankees_; }
  const std::vector<NodeId>& rankers() const { return rankers_; }
  std::size_t rankee_count() const { return rankees_.size(); }
  std::size_t ranker_count() const { return rankers_.size(); }

  // Restrict the rankee / ranker sets. Must be called before any queries;
  // the graph is immutable once shared.
  void set_rankees(const std::vector<NodeId>& rankees);
  void set_rankers(const std::vector<NodeId>& rankers);

  std::uint64_t external_id(NodeId v) const { return external_ids_[v]; }
  std::optional<NodeId> dense_id(std::uint64_t external) const;
  // True when external ids are not already the identity on 0..n-1.
  bool remapped() const { return remapped_; }

 private:
  std::size_t n_ = 0;
  bool directed_ = false;
  bool remapped_ = false;
  std::vector<std::size_t> out_offsets_;
  std::vector<Arc> out_arcs_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Arc> in_arcs_;
  std::vector<NodeId> rankees_;
  std::vector<NodeId> rankers_;
  std::vector<std::uint8_t> rankee_mask_;
  std::vector<std::uint8_t> ranker_mask_;
  std::vector<std::uint64_t> external_ids_;
  std::unordered_map<std::uint64_t, NodeId> dense_ids_;
};

// Parses a whitespace-separated edge list ("u v" or "u v w" per line, '#'
// starts a comment). External ids are remapped to dense 0..n-1 in order of
// first appearance. Missing lengths default to default_length; self-loops
// are dropped; parallel edges are kept. Throws std::runtime_error with the
// offending line number on malformed input and on empty input.
Graph load_edge_list(std::istream& in, bool directed,
                     double default_length = 1.0);
Graph load_edge_list_file(const std::string& path, bool directed,
                          double default_length = 1.0);

// Writes "external_id,dense_id" rows (with header) for a remapped graph.
void write_id_map(const Graph& g, std::ostream& out);

struct DistanceResult {
  NodeId source = 0;
  std::vector<double> dist;       // kUnreachable where no path exists
  std::vector<NodeId> scan_order; // reachable nodes by nondecreasing dist

  bool reachable(NodeId v) const { return !is_unreachable(dist[v]); }
};

// Exact single-source shortest paths. With use_transpose the result holds
// distances *to* source along original arc directions.
DistanceResult dijkstra(const Graph& g, NodeId source,
                        bool use_transpose = false);

struct TopRankee {
  NodeId node;
  double rank;  // resolved rank value, <= T
};

// All rankees u with rank(ranker, u) <= T under the given mode. The
// underlying Dijkstra stops as soon as the rank of any further node
// provably exceeds T.
std::vector<TopRankee> top_rankees(const Graph& g, NodeId ranker,
                                   std::uint64_t T,
                                   RankMode mode = RankMode::upper);

}  // namespace revrank
