#pragma once

#include <cstdint>
#include <vector>

#include "revrank/ads.hpp"
#include "revrank/types.hpp"

namespace revrank {

enum class Estimator : std::uint8_t { bottom_k = 0, hip = 1 };

// Distance -> neighborhood-cardinality estimates of one node, derived from
// its sketch. Pairs are strictly increasing in distance and nondecreasing
// in estimate, one pair per distinct entry distance.
struct EstimationList {
  NodeId node = 0;
  Estimator estimator = Estimator::bottom_k;
  std::uint32_t k = 0;
  std::uint64_t universe = 0;  // |U|
  std::vector<std::pair<double, double>> pairs;

  // Estimate of the number of rankees within distance d (strictly within,
  // when strict): the estimate of the farthest pair at distance <= d
  // (resp. < d), or 0 when no pair qualifies.
  double cardinality_at(double d, bool strict) const;
};

struct RankEstimate {
  double lower = 0.0;  // strict-neighborhood estimate
  double upper = 0.0;  // closed-neighborhood estimate

  double resolved(RankMode mode) const {
    return resolve_rank(lower, upper, mode);
  }
};

EstimationList build_estimation_list(const AdsSketch& sketch, NodeId node,
                                     std::uint32_t k,
                                     const RankAssignment& ranks,
                                     Estimator estimator);

// Estimated rank range a ranker assigns to a rankee at distance dist from
// it. An unreachable distance yields the range (reachable-set estimate,
// |U|].
RankEstimate estimate_rank(const EstimationList& list, double dist);

// Estimation lists for every node, all from the same sketch set.
struct EstimationSet {
  Estimator estimator = Estimator::bottom_k;
  std::uint32_t k = 0;
  std::uint64_t universe = 0;
  std::vector<EstimationList> lists;  // by node id

  const EstimationList& operator[](NodeId v) const { return lists[v]; }
};

EstimationSet build_estimation_lists(const AdsSketchSet& set,
                                     Estimator estimator);

}  // namespace revrank
