#include "revrank/rank_assignment.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace revrank {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RankAssignment RankAssignment::make(const Graph& g, Mode mode,
                                    std::uint64_t seed) {
  return make(g.rankees(), g.node_count(), mode, seed);
}

RankAssignment RankAssignment::make(const std::vector<NodeId>& rankees,
                                    std::size_t node_count, Mode mode,
                                    std::uint64_t seed) {
  if (rankees.empty())
    throw std::invalid_argument("rank assignment needs at least one rankee");
  RankAssignment a;
  a.mode_ = mode;
  a.seed_ = seed;
  a.r_.assign(node_count, 0.0);

  const std::size_t u = rankees.size();
  if (mode == Mode::permutation) {
    std::vector<NodeId> shuffled = rankees;
    std::mt19937_64 rng(seed);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t i = 0; i < u; ++i)
      a.r_[shuffled[i]] = static_cast<double>(i + 1) / static_cast<double>(u);
  } else {
    for (NodeId v : rankees) {
      std::uint64_t h = splitmix64(seed ^ splitmix64(v + 1));
      // 53 uniform bits mapped to (0,1].
      a.r_[v] = static_cast<double>((h >> 11) + 1) * 0x1.0p-53;
    }
  }

  a.order_ = rankees;
  std::sort(a.order_.begin(), a.order_.end(), [&](NodeId x, NodeId y) {
    if (a.r_[x] != a.r_[y]) return a.r_[x] < a.r_[y];
    return x < y;  // hash collisions break ties by node id
  });
  a.position_.assign(node_count, 0);
  for (std::size_t i = 0; i < u; ++i)
    a.position_[a.order_[i]] = static_cast<std::uint32_t>(i);
  return a;
}

RankAssignment RankAssignment::from_values(const std::vector<NodeId>& rankees,
                                           const std::vector<double>& values,
                                           std::size_t node_count, Mode mode,
                                           std::uint64_t seed) {
  if (values.size() != rankees.size())
    throw std::invalid_argument("rank value table size mismatch");
  RankAssignment a;
  a.mode_ = mode;
  a.seed_ = seed;
  a.r_.assign(node_count, 0.0);
  for (std::size_t i = 0; i < rankees.size(); ++i) a.r_[rankees[i]] = values[i];
  a.order_ = rankees;
  std::sort(a.order_.begin(), a.order_.end(), [&](NodeId x, NodeId y) {
    if (a.r_[x] != a.r_[y]) return a.r_[x] < a.r_[y];
    return x < y;
  });
  a.position_.assign(node_count, 0);
  for (std::size_t i = 0; i < a.order_.size(); ++i)
    a.position_[a.order_[i]] = static_cast<std::uint32_t>(i);
  return a;
}

double RankAssignment::prob_below(double tau) const {
  if (mode_ == Mode::hash) return tau;
  // r-values are positions/|U|; the number of free positions below the one
  // holding tau is round(tau * |U|) - 1.
  double u = static_cast<double>(order_.size());
  return (std::round(tau * u) - 1.0) / u;
}

}  // namespace revrank
