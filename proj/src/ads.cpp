#include "revrank/ads.hpp"

#include <algorithm>
#include <atomic>
#include <barrier>
#include <chrono>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <thread>

namespace revrank {

bool AdsSketch::insert(NodeId node, double r, double dist, std::uint32_t k) {
  if (dist > delta_ || (dist == delta_ && star_)) return false;

  // Find the insertion point from the tail (smallest distances). The new
  // candidate has the largest r seen so far, so within a distance tie it
  // goes in front of the existing tie group.
  std::size_t pos = entries_.size();
  std::size_t members_within = 0;  // non-auxiliary entries with dist <= d
  while (pos > 0 && entries_[pos - 1].dist <= dist) {
    if (!entries_[pos - 1].auxiliary) ++members_within;
    --pos;
  }
  // The candidate is a sketch member iff fewer than k members lie within
  // its distance ball; otherwise it only ties the current threshold.
  bool aux = members_within >= k;
  entries_.insert(entries_.begin() + pos, AdsEntry{node, r, dist, aux});

  std::size_t sz = entries_.size();
  if (sz >= k) {
    delta_ = entries_[sz - k].dist;
    star_ = sz >= k + 1 && entries_[sz - k - 1].dist == delta_;
  }
  return true;
}

AdsSketch AdsSketch::from_entries(std::vector<AdsEntry> entries,
                                  std::uint32_t k) {
  AdsSketch s;
  s.entries_ = std::move(entries);
  std::size_t sz = s.entries_.size();
  if (sz >= k) {
    s.delta_ = s.entries_[sz - k].dist;
    s.star_ = sz >= k + 1 && s.entries_[sz - k - 1].dist == s.delta_;
  }
  return s;
}

BatchSchedule batch_boundaries(std::size_t u_count, std::uint32_t k,
                               double mu) {
  if (k < 1) throw std::invalid_argument("batch_boundaries: k must be >= 1");
  if (!(mu > 0.0)) throw std::invalid_argument("batch_boundaries: mu must be > 0");
  BatchSchedule schedule;
  schedule.mu = mu;
  std::size_t end = std::min<std::size_t>(k, u_count);
  schedule.boundaries.push_back(end);
  double factor = 1.0;
  while (end < u_count) {
    factor *= 1.0 + mu;
    auto next = static_cast<std::size_t>(
        std::ceil(factor * static_cast<double>(k)));
    next = std::min(next, u_count);
    if (next > end) {
      schedule.boundaries.push_back(next);
      end = next;
    }
  }
  return schedule;
}

namespace {

// One pruned Dijkstra search from rankee u on the transpose graph. Visited
// nodes that pass the prune test are reported through emit; the search is
// cut at nodes that fail it.
template <typename PruneFn, typename EmitFn>
void pruned_search(const Graph& g, NodeId u, PruneFn&& pruned, EmitFn&& emit,
                   std::vector<double>& dist,
                   std::vector<std::uint8_t>& settled,
                   std::vector<NodeId>& touched) {
  using QItem = std::pair<double, NodeId>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;
  dist[u] = 0.0;
  touched.push_back(u);
  queue.push({0.0, u});
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (settled[v]) continue;
    settled[v] = 1;
    if (pruned(v, d)) continue;
    emit(v, d);
    for (const Arc& a : g.in_arcs(v)) {
      double nd = d + a.length;
      if (nd < dist[a.to]) {
        if (is_unreachable(dist[a.to])) touched.push_back(a.to);
        dist[a.to] = nd;
        queue.push({nd, a.to});
      }
    }
  }
  for (NodeId v : touched) {
    dist[v] = kUnreachable;
    settled[v] = 0;
  }
  touched.clear();
}

struct Proposal {
  NodeId target;        // sketch the entry is proposed for
  std::uint32_t r_pos;  // proposer's position in the r-sorted order
  double dist;
};

void build_sequential(const Graph& g, std::uint32_t k,
                      const RankAssignment& ranks, AdsSketchSet& set,
                      BuildStats& stats) {
  std::vector<double> dist(g.node_count(), kUnreachable);
  std::vector<std::uint8_t> settled(g.node_count(), 0);
  std::vector<NodeId> touched;
  for (NodeId u : ranks.order()) {
    double r = ranks.r(u);
    pruned_search(
        g, u,
        [&](NodeId v, double d) {
          if (prune_test(set.sketches[v], d) == PruneDecision::prune) {
            ++stats.pruned_scans;
            return true;
          }
          return false;
        },
        [&](NodeId v, double d) {
          set.sketches[v].insert(u, r, d, k);
          ++stats.node_scans;
        },
        dist, settled, touched);
  }
}

void build_batched(const Graph& g, std::uint32_t k,
                   const RankAssignment& ranks, double mu, unsigned workers,
                   AdsSketchSet& set, BuildStats& stats) {
  const auto& order = ranks.order();
  BatchSchedule schedule = batch_boundaries(order.size(), k, mu);
  stats.batches = schedule.boundaries.size();

  std::vector<double> frozen_delta(g.node_count(), kUnreachable);
  std::vector<std::uint8_t> frozen_star(g.node_count(), 0);

  const unsigned nworkers = std::max(1u, workers);
  std::vector<std::vector<Proposal>> buffers(nworkers);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counters(
      nworkers, {0, 0});
  std::atomic<std::size_t> next{0};
  std::size_t batch_end = 0;
  std::atomic<bool> done{false};

  auto run_searches = [&](unsigned w) {
    std::vector<double> dist(g.node_count(), kUnreachable);
    std::vector<std::uint8_t> settled(g.node_count(), 0);
    std::vector<NodeId> touched;
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= batch_end) break;
      NodeId u = order[i];
      auto r_pos = static_cast<std::uint32_t>(i);
      pruned_search(
          g, u,
          [&](NodeId v, double d) {
            if (d > frozen_delta[v] ||
                (d == frozen_delta[v] && frozen_star[v])) {
              ++counters[w].second;
              return true;
            }
            return false;
          },
          [&](NodeId v, double d) {
            buffers[w].push_back({v, r_pos, d});
            ++counters[w].first;
          },
          dist, settled, touched);
    }
  };

  // One persistent pool; every batch is a run/merge round trip through the
  // barrier.
  std::barrier sync(static_cast<std::ptrdiff_t>(nworkers) + 1);
  std::vector<std::thread> pool;
  if (nworkers > 1) {
    pool.reserve(nworkers);
    for (unsigned w = 0; w < nworkers; ++w) {
      pool.emplace_back([&, w] {
        for (;;) {
          sync.arrive_and_wait();  // batch state is ready
          if (done.load()) break;
          run_searches(w);
          sync.arrive_and_wait();  // searches finished
        }
      });
    }
  }

  std::size_t begin = 0;
  std::vector<Proposal> all;
  for (std::size_t end : schedule.boundaries) {
    // Freeze the threshold state all searches of this batch prune against.
    for (std::size_t v = 0; v < g.node_count(); ++v) {
      frozen_delta[v] = set.sketches[v].threshold();
      frozen_star[v] = set.sketches[v].threshold_tied() ? 1 : 0;
    }
    next.store(begin);
    batch_end = end;
    if (nworkers > 1) {
      sync.arrive_and_wait();
      sync.arrive_and_wait();
    } else {
      run_searches(0);
    }

    // Merge proposals per node in increasing r order; this replays the
    // sequential insertion order, so rejected proposals are exactly the
    // batching overhead.
    std::size_t total = 0;
    for (auto& b : buffers) total += b.size();
    all.clear();
    all.reserve(total);
    for (auto& b : buffers) {
      all.insert(all.end(), b.begin(), b.end());
      b.clear();
    }
    std::sort(all.begin(), all.end(), [](const Proposal& a, const Proposal& b) {
      if (a.target != b.target) return a.target < b.target;
      return a.r_pos < b.r_pos;
    });
    for (const Proposal& p : all) {
      NodeId u = order[p.r_pos];
      if (!set.sketches[p.target].insert(u, ranks.r(u), p.dist, k))
        ++stats.discarded;
    }
    stats.proposals += total;
    begin = end;
  }
  if (nworkers > 1) {
    done.store(true);
    sync.arrive_and_wait();
    for (auto& t : pool) t.join();
  }
  for (auto& c : counters) {
    stats.node_scans += c.first;
    stats.pruned_scans += c.second;
  }
}

}  // namespace

AdsSketchSet build_ads(const Graph& g, std::uint32_t k,
                       const RankAssignment& ranks,
                       const BuildOptions& options, BuildStats* stats) {
  if (k < 1) throw std::invalid_argument("build_ads: k must be >= 1");
  if (options.workers < 1)
    throw std::invalid_argument("build_ads: workers must be >= 1");

  auto start = std::chrono::steady_clock::now();
  AdsSketchSet set;
  set.k = k;
  set.ranks = ranks;
  set.sketches.resize(g.node_count());

  BuildStats local;
  BuildStats& st = stats ? *stats : local;
  st = BuildStats{};

  if (options.schedule == BuildOptions::Schedule::sequential)
    build_sequential(g, k, ranks, set, st);
  else
    build_batched(g, k, ranks, options.mu, options.workers, set, st);

  for (const AdsSketch& s : set.sketches) {
    st.entries_total += s.size();
    for (const AdsEntry& e : s.entries())
      if (e.auxiliary) ++st.entries_auxiliary;
  }
  st.overhead_ratio =
      st.entries_total
          ? static_cast<double>(st.discarded) / static_cast<double>(st.entries_total)
          : 0.0;
  st.build_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return set;
}

}  // namespace revrank
