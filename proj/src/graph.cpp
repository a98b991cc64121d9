#include "revrank/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>

namespace revrank {

namespace {

std::vector<NodeId> all_nodes(std::size_t n) {
  std::vector<NodeId> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<NodeId>(i);
  return v;
}

void build_csr(std::size_t n, const std::vector<std::pair<NodeId, Arc>>& arcs,
               std::vector<std::size_t>& offsets, std::vector<Arc>& flat) {
  offsets.assign(n + 1, 0);
  for (const auto& [from, arc] : arcs) offsets[from + 1]++;
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  flat.resize(arcs.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [from, arc] : arcs) flat[cursor[from]++] = arc;
}

}  // namespace

Graph::Graph(std::size_t n, const std::vector<EdgeInput>& edges, bool directed,
             std::vector<std::uint64_t> external_ids)
    : n_(n), directed_(directed) {
  if (external_ids.empty()) {
    external_ids_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) external_ids_[i] = i;
  } else {
    if (external_ids.size() != n_)
      throw std::invalid_argument("external id table size mismatch");
    external_ids_ = std::move(external_ids);
  }
  dense_ids_.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto [it, fresh] = dense_ids_.emplace(external_ids_[i], NodeId(i));
    if (!fresh) throw std::invalid_argument("duplicate external id");
    if (external_ids_[i] != i) remapped_ = true;
  }

  std::vector<std::pair<NodeId, Arc>> fwd;
  std::vector<std::pair<NodeId, Arc>> bwd;
  fwd.reserve(edges.size() * (directed ? 1 : 2));
  for (const EdgeInput& e : edges) {
    if (e.u >= n_ || e.v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (!(e.length > 0.0))
      throw std::invalid_argument("edge length must be positive");
    if (e.u == e.v) continue;  // self-loops never affect ranks
    NodeId u = static_cast<NodeId>(e.u), v = static_cast<NodeId>(e.v);
    fwd.push_back({u, {v, e.length}});
    if (directed_) {
      bwd.push_back({v, {u, e.length}});
    } else {
      fwd.push_back({v, {u, e.length}});
    }
  }
  build_csr(n_, fwd, out_offsets_, out_arcs_);
  if (directed_) build_csr(n_, bwd, in_offsets_, in_arcs_);

  rankees_ = all_nodes(n_);
  rankers_ = rankees_;
  rankee_mask_.assign(n_, 1);
  ranker_mask_.assign(n_, 1);
}

void Graph::set_rankees(const std::vector<NodeId>& rankees) {
  rankee_mask_.assign(n_, 0);
  rankees_.clear();
  for (NodeId v : rankees) {
    if (v >= n_) throw std::invalid_argument("rankee id out of range");
    if (!rankee_mask_[v]) {
      rankee_mask_[v] = 1;
      rankees_.push_back(v);
    }
  }
  std::sort(rankees_.begin(), rankees_.end());
  if (rankees_.empty()) throw std::invalid_argument("rankee set is empty");
}

void Graph::set_rankers(const std::vector<NodeId>& rankers) {
  ranker_mask_.assign(n_, 0);
  rankers_.clear();
  for (NodeId v : rankers) {
    if (v >= n_) throw std::invalid_argument("ranker id out of range");
    if (!ranker_mask_[v]) {
      ranker_mask_[v] = 1;
      rankers_.push_back(v);
    }
  }
  std::sort(rankers_.begin(), rankers_.end());
  if (rankers_.empty()) throw std::invalid_argument("ranker set is empty");
}

std::optional<NodeId> Graph::dense_id(std::uint64_t external) const {
  auto it = dense_ids_.find(external);
  if (it == dense_ids_.end()) return std::nullopt;
  return it->second;
}

namespace {

struct RawEdge {
  std::uint64_t u, v;
  double w;
};

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("edge list parse error at line " +
                           std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph load_edge_list(std::istream& in, bool directed, double default_length) {
  std::vector<RawEdge> raw;
  std::unordered_map<std::uint64_t, NodeId> dense;
  std::vector<std::uint64_t> external;
  bool identity = true;

  auto intern = [&](std::uint64_t ext) {
    auto [it, fresh] = dense.emplace(ext, NodeId(external.size()));
    if (fresh) {
      if (ext != external.size()) identity = false;
      external.push_back(ext);
    }
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (p == end || *p == '#') continue;

    std::uint64_t ids[2];
    for (int t = 0; t < 2; ++t) {
      auto [next, ec] = std::from_chars(p, end, ids[t]);
      if (ec != std::errc())
        parse_fail(line_no, t == 0 ? "expected source node id"
                                   : "expected target node id");
      p = next;
      while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    }
    double w = default_length;
    if (p < end) {
      auto [next, ec] = std::from_chars(p, end, w);
      if (ec != std::errc()) parse_fail(line_no, "expected edge length");
      p = next;
      while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
      if (p != end) parse_fail(line_no, "trailing tokens");
      if (!(w > 0.0)) parse_fail(line_no, "edge length must be positive");
    }
    raw.push_back({ids[0], ids[1], w});
    intern(ids[0]);
    intern(ids[1]);
  }
  if (raw.empty()) throw std::runtime_error("edge list is empty");

  std::vector<EdgeInput> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw)
    edges.push_back({dense.at(e.u), dense.at(e.v), e.w});
  std::vector<std::uint64_t> ext;
  if (!identity) ext = external;
  return Graph(external.size(), edges, directed, std::move(ext));
}

Graph load_edge_list_file(const std::string& path, bool directed,
                          double default_length) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load_edge_list(in, directed, default_length);
}

void write_id_map(const Graph& g, std::ostream& out) {
  out << "external_id,dense_id\n";
  for (NodeId v = 0; v < g.node_count(); ++v)
    out << g.external_id(v) << ',' << v << '\n';
}

DistanceResult dijkstra(const Graph& g, NodeId source, bool use_transpose) {
  if (source >= g.node_count())
    throw std::invalid_argument("dijkstra: source id out of range");
  DistanceResult res;
  res.source = source;
  res.dist.assign(g.node_count(), kUnreachable);
  res.scan_order.reserve(64);

  using QItem = std::pair<double, NodeId>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;
  std::vector<std::uint8_t> settled(g.node_count(), 0);
  res.dist[source] = 0.0;
  queue.push({0.0, source});
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (settled[v]) continue;  // stale entry
    settled[v] = 1;
    res.scan_order.push_back(v);
    for (const Arc& a : g.arcs(v, use_transpose)) {
      double nd = d + a.length;
      if (nd < res.dist[a.to]) {
        res.dist[a.to] = nd;
        queue.push({nd, a.to});
      }
    }
  }
  return res;
}

std::vector<TopRankee> top_rankees(const Graph& g, NodeId ranker,
                                   std::uint64_t T, RankMode mode) {
  if (ranker >= g.node_count())
    throw std::invalid_argument("top_rankees: ranker id out of range");
  if (T < 1) throw std::invalid_argument("top_rankees: T must be >= 1");

  std::vector<TopRankee> out;
  using QItem = std::pair<double, NodeId>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;
  std::vector<double> dist(g.node_count(), kUnreachable);
  std::vector<std::uint8_t> settled(g.node_count(), 0);
  dist[ranker] = 0.0;
  queue.push({0.0, ranker});

  std::uint64_t closed = 0;       // rankees settled so far (closed ball)
  double tier_dist = 0.0;
  std::vector<NodeId> tier;       // rankees at the current distance
  const double thr = static_cast<double>(T);

  auto tier_value = [&](std::uint64_t strict, std::uint64_t tier_size) {
    return resolve_rank(static_cast<double>(strict),
                        static_cast<double>(strict + tier_size), mode);
  };
  auto flush_tier = [&]() -> bool {  // returns false once ranks exceed T
    if (tier.empty()) return true;
    std::uint64_t strict = closed;
    closed += tier.size();
    double value = tier_value(strict, tier.size());
    if (value > thr) return false;
    for (NodeId u : tier) out.push_back({u, value});
    tier.clear();
    return true;
  };

  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (settled[v]) continue;
    if (!tier.empty() && d > tier_dist) {
      if (!flush_tier()) return out;
    }
    settled[v] = 1;
    if (g.is_rankee(v)) {
      tier_dist = d;
      tier.push_back(v);
      // Abort early when even a lower bound on this tier's rank exceeds T.
      if (tier_value(closed, tier.size()) > thr) return out;
    }
    for (const Arc& a : g.out_arcs(v)) {
      double nd = d + a.length;
      if (nd < dist[a.to]) {
        dist[a.to] = nd;
        queue.push({nd, a.to});
      }
    }
  }
  flush_tier();
  return out;
}

}  // namespace revrank
