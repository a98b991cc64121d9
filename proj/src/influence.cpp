#include "revrank/influence.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>

namespace revrank {

void InfluenceSpec::validate() const {
  if (alpha == Alpha::threshold && threshold < 1)
    throw std::invalid_argument("influence: threshold must be >= 1");
  if (alpha == Alpha::table) {
    if (table.empty())
      throw std::invalid_argument("influence: empty alpha table");
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] < 0.0)
        throw std::invalid_argument("influence: alpha must be nonnegative");
      if (i > 0 && table[i] > table[i - 1])
        throw std::invalid_argument("influence: alpha must be nonincreasing");
    }
  }
  for (double b : beta)
    if (b < 0.0)
      throw std::invalid_argument("influence: beta must be nonnegative");
}

double InfluenceSpec::alpha_at(double rank) const {
  switch (alpha) {
    case Alpha::threshold:
      return rank <= static_cast<double>(threshold) ? 1.0 : 0.0;
    case Alpha::reciprocal:
      return rank > 0.0 ? 1.0 / rank : 1.0;
    case Alpha::table: {
      double idx = std::ceil(rank);
      if (idx < 1.0) idx = 1.0;
      auto i = static_cast<std::size_t>(idx) - 1;
      return i < table.size() ? table[i] : 0.0;
    }
  }
  return 0.0;
}

std::optional<double> InfluenceSpec::support_cutoff() const {
  if (alpha == Alpha::threshold) return static_cast<double>(threshold);
  if (alpha == Alpha::table) {
    std::size_t last = table.size();
    while (last > 0 && table[last - 1] == 0.0) --last;
    if (last == 0) return 0.0;
    return static_cast<double>(last);
  }
  return std::nullopt;
}

double estimate_influence(const Graph& g, const EstimationSet& lists,
                          std::span<const NodeId> seeds,
                          const InfluenceSpec& spec) {
  spec.validate();
  if (!spec.beta.empty() && spec.beta.size() != g.node_count())
    throw std::invalid_argument("influence: beta table size mismatch");
  ReverseRankScan scan(g, lists, seeds, spec.support_cutoff());
  double total = 0.0;
  while (auto item = scan.next()) {
    if (!g.is_ranker(item->node)) continue;
    double beta = spec.beta.empty() ? 1.0 : spec.beta[item->node];
    if (beta == 0.0) continue;
    double rank = item->rank_est;
    if (spec.rank_mode != RankMode::upper) {
      RankEstimate est = estimate_rank(lists[item->node], item->dist);
      rank = est.resolved(spec.rank_mode);
    }
    total += beta * spec.alpha_at(rank);
  }
  return total;
}

SeedList exact_greedy_im(const Graph& g, std::uint64_t T,
                         std::size_t max_seeds, RankMode mode) {
  if (T < 1) throw std::invalid_argument("exact_greedy_im: T must be >= 1");

  // coverage[u]: rankers that place rankee u in their top T;
  // coverers[z]: rankees that cover ranker z.
  std::vector<std::vector<NodeId>> coverage(g.node_count());
  std::vector<std::vector<NodeId>> coverers(g.node_count());
  for (NodeId z : g.rankers()) {
    for (const TopRankee& t : top_rankees(g, z, T, mode)) {
      coverers[z].push_back(t.node);
      coverage[t.node].push_back(z);
    }
  }

  std::vector<std::int64_t> count(g.node_count(), 0);
  for (NodeId u : g.rankees())
    count[u] = static_cast<std::int64_t>(coverage[u].size());
  std::vector<std::uint8_t> selected(g.node_count(), 0);
  std::vector<std::uint8_t> covered(g.node_count(), 0);

  SeedList out;
  while (max_seeds == 0 || out.entries.size() < max_seeds) {
    NodeId best = 0;
    std::int64_t best_count = 0;
    for (NodeId u : g.rankees()) {
      if (!selected[u] && count[u] > best_count) {
        best = u;
        best_count = count[u];
      }
    }
    if (best_count <= 0) break;
    selected[best] = 1;
    out.entries.push_back({best, static_cast<std::uint64_t>(best_count)});
    out.covered += static_cast<std::uint64_t>(best_count);
    for (NodeId z : coverage[best]) {
      if (covered[z]) continue;
      covered[z] = 1;
      for (NodeId v : coverers[z]) --count[v];
    }
    coverage[best].clear();
  }
  return out;
}

namespace {

class SampleSearch {
 public:
  explicit SampleSearch(std::size_t n)
      : dist_(n, kUnreachable), settled_(n, 0) {}

  // Forward Dijkstra from ranker z, visiting rankees while the estimated
  // rank n̂_z(d) stays within T. Calls visit(rankee) and stops early when
  // it returns false.
  template <typename VisitFn>
  void run(const Graph& g, const EstimationSet& lists, NodeId z, double T,
           VisitFn&& visit) {
    using QItem = std::pair<double, NodeId>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;
    dist_[z] = 0.0;
    touched_.push_back(z);
    queue.push({0.0, z});
    const EstimationList& list = lists[z];
    bool stop = false;
    while (!queue.empty() && !stop) {
      auto [d, v] = queue.top();
      queue.pop();
      if (settled_[v]) continue;
      settled_[v] = 1;
      // The estimate depends only on the distance, so once it passes T
      // every node still in the queue is out of range as well.
      if (list.cardinality_at(d, false) > T) break;
      if (g.is_rankee(v) && !visit(v)) {
        stop = true;
        break;
      }
      for (const Arc& a : g.out_arcs(v)) {
        double nd = d + a.length;
        if (nd < dist_[a.to]) {
          if (is_unreachable(dist_[a.to])) touched_.push_back(a.to);
          dist_[a.to] = nd;
          queue.push({nd, a.to});
        }
      }
    }
    for (NodeId v : touched_) {
      dist_[v] = kUnreachable;
      settled_[v] = 0;
    }
    touched_.clear();
  }

 private:
  std::vector<double> dist_;
  std::vector<std::uint8_t> settled_;
  std::vector<NodeId> touched_;
};

}  // namespace

SkimResult skim_im(const Graph& g, const EstimationSet& lists,
                   const SkimOptions& options) {
  if (options.K < 1) throw std::invalid_argument("skim_im: K must be >= 1");
  if (options.T < 1) throw std::invalid_argument("skim_im: T must be >= 1");
  if (options.coverage_target &&
      (*options.coverage_target < 0.0 || *options.coverage_target > 1.0))
    throw std::invalid_argument("skim_im: coverage target must be in [0,1]");
  if (lists.estimator != Estimator::bottom_k)
    throw std::invalid_argument("skim_im requires bottom-k estimation lists");

  const double T = static_cast<double>(options.T);
  const std::uint64_t ranker_total = g.ranker_count();
  const std::uint64_t coverage_goal =
      options.coverage_target
          ? static_cast<std::uint64_t>(
                std::ceil(*options.coverage_target *
                          static_cast<double>(ranker_total)))
          : ranker_total;

  SkimResult result;
  result.best_seed.assign(g.node_count(), BestSeed{});
  std::vector<std::uint32_t> sample_size(g.node_count(), 0);
  std::vector<std::vector<NodeId>> inverted_sample(g.node_count());

  std::vector<NodeId> shuffle = g.rankers();
  std::mt19937_64 rng(options.shuffle_seed);
  std::shuffle(shuffle.begin(), shuffle.end(), rng);
  std::size_t shuffle_pos = 0;

  std::uint64_t covered = 0;
  std::uint64_t live_samples = 0;  // increments minus decrements
  SampleSearch sampler(g.node_count());

  while (covered < ranker_total &&
         (shuffle_pos < shuffle.size() || live_samples > 0)) {
    std::optional<NodeId> next_seed;

    // Build samples until some candidate holds K of them.
    while (shuffle_pos < shuffle.size() && !next_seed) {
      NodeId z = shuffle[shuffle_pos++];
      if (result.best_seed[z].covered()) continue;
      sampler.run(g, lists, z, T, [&](NodeId v) {
        ++sample_size[v];
        ++live_samples;
        inverted_sample[z].push_back(v);
        if (sample_size[v] == options.K) {
          next_seed = v;
          return false;  // abort mid-search
        }
        return true;
      });
    }

    if (!next_seed) {
      // Shuffle exhausted: fall back to the best sampled candidate.
      NodeId best = 0;
      std::uint32_t best_size = 0;
      for (NodeId u : g.rankees()) {
        if (sample_size[u] > best_size) {
          best = u;
          best_size = sample_size[u];
        }
      }
      if (best_size == 0) break;
      next_seed = best;
    }

    // Coverage update: pruned reverse-rank search from the new seed.
    NodeId x = *next_seed;
    std::uint64_t marginal = 0;
    NodeId seed_span[1] = {x};
    ReverseRankScan scan(g, lists, seed_span, T);
    while (auto item = scan.next()) {
      NodeId v = item->node;
      BestSeed& best = result.best_seed[v];
      // An earlier seed already beats this one here; the subtree rooted at
      // v cannot improve either.
      if (best.rank < item->rank_est ||
          (best.rank == item->rank_est && best.dist <= item->dist)) {
        scan.prune_current();
        continue;
      }
      if (!best.covered() && g.is_ranker(v)) {
        ++marginal;
        ++covered;
        for (NodeId w : inverted_sample[v]) {
          --sample_size[w];
          --live_samples;
        }
        inverted_sample[v].clear();
        inverted_sample[v].shrink_to_fit();
      }
      best.rank = item->rank_est;
      best.dist = item->dist;
    }

    result.seeds.entries.push_back({x, marginal});
    result.seeds.covered += marginal;
    if (options.max_seeds && result.seeds.entries.size() >= options.max_seeds)
      break;
    if (options.coverage_target && covered >= coverage_goal) break;
  }
  return result;
}

}  // namespace revrank
