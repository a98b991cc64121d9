#pragma once

#include <cstdint>
#include <vector>

#include "revrank/graph.hpp"
#include "revrank/rank_assignment.hpp"
#include "revrank/types.hpp"

namespace revrank {

struct AdsEntry {
  NodeId node;
  double r;
  double dist;
  // Entries kept only because they tie the threshold distance; they are not
  // members under the sketch membership rule and the HIP estimator skips
  // them, but they keep the threshold state well defined at tie distances.
  bool auxiliary;
};

// All-distances sketch of one node: entries sorted by decreasing distance
// (ties by decreasing r) plus the maintained threshold state. threshold()
// is the k-th smallest entry distance (supremum while fewer than k entries)
// and threshold_tied() tells whether the (k+1)-th smallest equals it.
class AdsSketch {
 public:
  const std::vector<AdsEntry>& entries() const { return entries_; }
  double threshold() const { return delta_; }
  bool threshold_tied() const { return star_; }
  std::size_t size() const { return entries_.size(); }

  // Applies the insertion rule for a candidate at distance dist. Candidates
  // must arrive in increasing (r, node id) order. Returns false when the
  // candidate is pruned.
  bool insert(NodeId node, double r, double dist, std::uint32_t k);

  void reserve(std::size_t n) { entries_.reserve(n); }

  // For deserialization: entries must already be in sketch order.
  static AdsSketch from_entries(std::vector<AdsEntry> entries,
                                std::uint32_t k);

 private:
  std::vector<AdsEntry> entries_;
  double delta_ = kUnreachable;
  bool star_ = false;
};

enum class PruneDecision { prune, insert };

// The candidate-at-distance-d test against a sketch's threshold state.
inline PruneDecision prune_test(const AdsSketch& sketch, double d) {
  if (d > sketch.threshold() ||
      (d == sketch.threshold() && sketch.threshold_tied()))
    return PruneDecision::prune;
  return PruneDecision::insert;
}

struct BatchSchedule {
  double mu = 0.1;
  // End positions (exclusive, in rankees sorted by increasing r) of each
  // batch; the last boundary equals the rankee count.
  std::vector<std::size_t> boundaries;
};

// Geometric batch schedule: the first batch covers the min(k,|U|) lowest-r
// rankees, the j-th ends at position ceil((1+mu)^(j-1) * k), capped at |U|.
BatchSchedule batch_boundaries(std::size_t u_count, std::uint32_t k,
                               double mu);

struct BuildStats {
  std::uint64_t entries_total = 0;      // final entries, auxiliary included
  std::uint64_t entries_auxiliary = 0;
  std::uint64_t node_scans = 0;         // scans that produced an entry/proposal
  std::uint64_t pruned_scans = 0;
  std::uint64_t proposals = 0;          // batched mode only
  std::uint64_t discarded = 0;          // proposals rejected at merge
  double overhead_ratio = 0.0;          // discarded / entries_total
  std::size_t batches = 0;
  double build_seconds = 0.0;
};

struct BuildOptions {
  enum class Schedule { sequential, batched };
  Schedule schedule = Schedule::sequential;
  double mu = 0.1;
  unsigned workers = 1;

  static BuildOptions sequential_build() { return {}; }
  static BuildOptions batched(double mu, unsigned workers) {
    return {Schedule::batched, mu, workers};
  }
};

// Sketches for all nodes plus the parameters they were built with.
struct AdsSketchSet {
  std::uint32_t k = 0;
  RankAssignment ranks;
  std::vector<AdsSketch> sketches;  // by node id
};

// Builds the all-distances sketches of every node with pruned Dijkstra
// searches from the rankees in increasing r order. The batched schedule
// runs each batch's searches concurrently against a frozen threshold
// snapshot and merges proposals in increasing r order, which yields
// sketches identical to the sequential schedule.
AdsSketchSet build_ads(const Graph& g, std::uint32_t k,
                       const RankAssignment& ranks,
                       const BuildOptions& options = {},
                       BuildStats* stats = nullptr);

}  // namespace revrank
