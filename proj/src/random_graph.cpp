#include "revrank/random_graph.hpp"

#include <random>
#include <stdexcept>

namespace revrank {

Graph random_graph(const RandomGraphOptions& options) {
  if (options.nodes < 1)
    throw std::invalid_argument("random_graph: need at least one node");
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, options.nodes - 1);
  std::uniform_real_distribution<double> real_len(options.length_min,
                                                  options.length_max);
  std::uniform_int_distribution<std::int64_t> int_len(
      static_cast<std::int64_t>(options.length_min),
      static_cast<std::int64_t>(options.length_max));

  std::vector<EdgeInput> edges;
  edges.reserve(options.edges);
  while (edges.size() < options.edges && options.nodes > 1) {
    std::uint64_t u = pick(rng);
    std::uint64_t v = pick(rng);
    if (u == v) continue;
    double w = options.integer_lengths ? static_cast<double>(int_len(rng))
                                       : real_len(rng);
    edges.push_back({u, v, w});
  }
  return Graph(options.nodes, edges, options.directed);
}

}  // namespace revrank
