#pragma once

#include <vector>

#include "revrank/graph.hpp"

namespace revrank::testing {

// 0 - 1 - 2 with unit lengths.
inline Graph path3() {
  return Graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}, /*directed=*/false);
}

// Star with center 0 and leaves 1, 2, 3 (the c-{a,b,e} example; a=1, b=2,
// e=3), unit lengths.
inline Graph star4() {
  return Graph(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}},
               /*directed=*/false);
}

}  // namespace revrank::testing
