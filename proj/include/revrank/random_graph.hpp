#pragma once

#include <cstdint>

#include "revrank/graph.hpp"

namespace revrank {

struct RandomGraphOptions {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  bool directed = false;
  std::uint64_t seed = 0;
  // Edge lengths drawn uniformly from [length_min, length_max]; integral
  // draws when integer_lengths (useful for forcing distance ties).
  double length_min = 1.0;
  double length_max = 1.0;
  bool integer_lengths = false;
};

// Uniform random multigraph: `edges` endpoint pairs drawn uniformly among
// ordered pairs of distinct nodes. Deterministic for a fixed seed.
Graph random_graph(const RandomGraphOptions& options);

}  // namespace revrank
