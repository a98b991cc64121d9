#include "revrank/estimators.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace revrank {

double EstimationList::cardinality_at(double d, bool strict) const {
  // Largest pair with dist <= d (or < d when strict).
  auto it = strict ? std::lower_bound(pairs.begin(), pairs.end(), d,
                                      [](const auto& p, double x) {
                                        return p.first < x;
                                      })
                   : std::upper_bound(pairs.begin(), pairs.end(), d,
                                      [](double x, const auto& p) {
                                        return x < p.first;
                                      });
  if (it == pairs.begin()) return 0.0;
  return std::prev(it)->second;
}

namespace {

// Bounded max-heap tracking the k smallest r values seen.
class SmallestK {
 public:
  explicit SmallestK(std::uint32_t k) : k_(k) {}
  void push(double r) {
    if (heap_.size() < k_) {
      heap_.push(r);
    } else if (r < heap_.top()) {
      heap_.pop();
      heap_.push(r);
    }
  }
  bool full() const { return heap_.size() == k_; }
  double kth() const { return heap_.top(); }

 private:
  std::uint32_t k_;
  std::priority_queue<double> heap_;
};

}  // namespace

EstimationList build_estimation_list(const AdsSketch& sketch, NodeId node,
                                     std::uint32_t k,
                                     const RankAssignment& ranks,
                                     Estimator estimator) {
  if (k < 1) throw std::invalid_argument("estimation list: k must be >= 1");
  EstimationList list;
  list.node = node;
  list.estimator = estimator;
  list.k = k;
  list.universe = ranks.rankee_count();

  const auto& entries = sketch.entries();  // decreasing distance
  SmallestK smallest(k);

  if (estimator == Estimator::bottom_k) {
    // Walk entries in increasing distance, closing each distance group with
    // an estimate from the k smallest r values seen so far.
    std::size_t seen = 0;
    auto it = entries.rbegin();
    while (it != entries.rend()) {
      double d = it->dist;
      while (it != entries.rend() && it->dist == d) {
        smallest.push(it->r);
        ++seen;
        ++it;
      }
      double est;
      if (seen < k) {
        est = static_cast<double>(seen);  // the ball is stored exactly
      } else if (k == 1) {
        est = 0.0;
      } else {
        est = static_cast<double>(k - 1) / ranks.prob_below(smallest.kth());
      }
      list.pairs.push_back({d, est});
    }
  } else {
    // HIP: every non-auxiliary entry contributes the inverse of its
    // inclusion probability, determined by the k-th smallest r strictly
    // closer; distance groups share the same threshold.
    std::size_t closer = 0;  // non-auxiliary entries strictly closer
    double sum = 0.0;
    auto it = entries.rbegin();
    while (it != entries.rend()) {
      double d = it->dist;
      std::size_t group_members = 0;
      auto group_begin = it;
      while (it != entries.rend() && it->dist == d) {
        if (!it->auxiliary) {
          double p = closer < k ? 1.0 : ranks.prob_below(smallest.kth());
          sum += 1.0 / p;
          ++group_members;
        }
        ++it;
      }
      if (group_members > 0) list.pairs.push_back({d, sum});
      for (auto g = group_begin; g != it; ++g)
        if (!g->auxiliary) smallest.push(g->r);
      closer += group_members;
    }
  }
  return list;
}

RankEstimate estimate_rank(const EstimationList& list, double dist) {
  RankEstimate est;
  est.lower = list.cardinality_at(dist, /*strict=*/true);
  if (is_unreachable(dist)) {
    est.upper = static_cast<double>(list.universe);
  } else {
    est.upper = list.cardinality_at(dist, /*strict=*/false);
  }
  return est;
}

EstimationSet build_estimation_lists(const AdsSketchSet& set,
                                     Estimator estimator) {
  EstimationSet out;
  out.estimator = estimator;
  out.k = set.k;
  out.universe = set.ranks.rankee_count();
  out.lists.reserve(set.sketches.size());
  for (std::size_t v = 0; v < set.sketches.size(); ++v)
    out.lists.push_back(build_estimation_list(
        set.sketches[v], static_cast<NodeId>(v), set.k, set.ranks, estimator));
  return out;
}

}  // namespace revrank
