#include "revrank/reverse_rank.hpp"

#include <algorithm>
#include <stdexcept>

namespace revrank {

ReverseRankScan::ReverseRankScan(const Graph& g, const EstimationSet& lists,
                                 std::span<const NodeId> seeds,
                                 std::optional<double> rank_cutoff)
    : graph_(g), lists_(lists), cutoff_(rank_cutoff) {
  if (seeds.empty())
    throw std::invalid_argument("reverse-rank scan: empty seed set");
  if (lists.estimator != Estimator::bottom_k)
    throw std::invalid_argument(
        "reverse-rank scan requires bottom-k estimation lists");
  if (lists.lists.size() != g.node_count())
    throw std::invalid_argument(
        "reverse-rank scan: estimation lists do not match the graph");
  best_dist_.assign(g.node_count(), kUnreachable);
  settled_.assign(g.node_count(), 0);
  heap_.reserve(seeds.size() + 64);
  for (NodeId s : seeds) {
    if (s >= g.node_count())
      throw std::invalid_argument("reverse-rank scan: seed id out of range");
    if (!g.is_rankee(s))
      throw std::invalid_argument("reverse-rank scan: seed is not a rankee");
    if (best_dist_[s] == 0.0) continue;  // duplicate seed
    best_dist_[s] = 0.0;
    double est = lists_[s].cardinality_at(0.0, /*strict=*/false);
    heap_.push_back({est, 0.0, s});
  }
  std::make_heap(heap_.begin(), heap_.end(), std::greater<>());
}

void ReverseRankScan::relax(NodeId v, double dist_v) {
  for (const Arc& a : graph_.in_arcs(v)) {
    ++stats_.relaxed_arcs;
    NodeId u = a.to;
    if (settled_[u]) continue;
    double nd = dist_v + a.length;
    if (nd < best_dist_[u]) {
      best_dist_[u] = nd;
      // The bound on the distance got tighter, so by monotonicity of the
      // estimates the priority can only decrease; the superseded heap
      // entry is skipped as stale when popped.
      heap_.push_back({lists_[u].cardinality_at(nd, false), nd, u});
      std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
    }
  }
}

std::optional<RevRankItem> ReverseRankScan::next() {
  if (pending_) {
    relax(pending_->node, pending_->dist);
    pending_ = std::nullopt;
  }
  while (!heap_.empty()) {
    QItem top = heap_.front();
    std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
    heap_.pop_back();
    if (settled_[top.node] || top.dist != best_dist_[top.node])
      continue;  // stale
    if (cutoff_ && top.rank_est > *cutoff_) {
      heap_.clear();  // sorted access: everything later is larger too
      return std::nullopt;
    }
    settled_[top.node] = 1;
    ++stats_.emitted;
    pending_ = RevRankItem{top.node, top.dist, top.rank_est};
    return pending_;
  }
  return std::nullopt;
}

std::vector<RevRankRow> reverse_rank_rows(const Graph& g,
                                          const EstimationSet& lists,
                                          std::span<const NodeId> seeds,
                                          std::optional<double> rank_cutoff,
                                          std::optional<std::size_t> top,
                                          bool include_unreachable) {
  if (include_unreachable && rank_cutoff)
    throw std::invalid_argument(
        "include_unreachable cannot be combined with a rank cutoff");
  std::vector<RevRankRow> rows;
  ReverseRankScan scan(g, lists, seeds, rank_cutoff);
  std::vector<std::uint8_t> seen;
  if (include_unreachable) seen.assign(g.node_count(), 0);
  while (auto item = scan.next()) {
    rows.push_back(
        {item->node, item->dist, estimate_rank(lists[item->node], item->dist)});
    if (include_unreachable) seen[item->node] = 1;
    if (top && rows.size() >= *top) return rows;
  }
  if (include_unreachable) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (seen[v]) continue;
      rows.push_back({v, kUnreachable, estimate_rank(lists[v], kUnreachable)});
      if (top && rows.size() >= *top) return rows;
    }
  }
  return rows;
}

}  // namespace revrank
