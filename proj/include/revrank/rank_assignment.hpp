#pragma once

#include <cstdint>
#include <vector>

#include "revrank/graph.hpp"
#include "revrank/types.hpp"

namespace revrank {

// Assigns every rankee a value r in (0,1]. Permutation mode draws a seeded
// random permutation and uses position/|U|; hash mode derives r from
// (seed, node id). Deterministic for a fixed (mode, seed).
class RankAssignment {
 public:
  enum class Mode : std::uint8_t { permutation = 0, hash = 1 };

  static RankAssignment make(const Graph& g, Mode mode, std::uint64_t seed);
  static RankAssignment make(const std::vector<NodeId>& rankees,
                             std::size_t node_count, Mode mode,
                             std::uint64_t seed);
  // Rebuilds an assignment from explicit values (sketch file loading).
  static RankAssignment from_values(const std::vector<NodeId>& rankees,
                                    const std::vector<double>& values,
                                    std::size_t node_count, Mode mode,
                                    std::uint64_t seed);

  Mode mode() const { return mode_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t rankee_count() const { return order_.size(); }

  double r(NodeId v) const { return r_[v]; }
  // Rankees sorted by increasing (r, node id); position(v) is v's index.
  const std::vector<NodeId>& order() const { return order_; }
  std::uint32_t position(NodeId v) const { return position_[v]; }

  // Probability that the r-value of another rankee falls below tau, used by
  // the inverse-probability estimators. For hash values this is tau itself;
  // for a permutation the count of positions below tau's over |U|.
  double prob_below(double tau) const;

 private:
  Mode mode_ = Mode::permutation;
  std::uint64_t seed_ = 0;
  std::vector<double> r_;           // by node id; unset for non-rankees
  std::vector<NodeId> order_;
  std::vector<std::uint32_t> position_;
};

}  // namespace revrank
