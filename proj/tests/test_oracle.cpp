#include <doctest.h>

#include <random>

#include "revrank/oracle.hpp"
#include "revrank/random_graph.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace revrank;
namespace rt = revrank::testing;

TEST_CASE("exact reverse ranks on fixtures") {
  Graph path = rt::path3();
  auto rr = exact_reverse_ranks(path, 2);
  REQUIRE(rr.size() == 3);
  CHECK(rr[0].dist == 2.0);
  CHECK(rr[0].lower == 2);
  CHECK(rr[0].upper == 3);
  CHECK(rr[1].dist == 1.0);
  CHECK(rr[1].lower == 1);
  CHECK(rr[1].upper == 3);
  CHECK(rr[2].dist == 0.0);
  CHECK(rr[2].lower == 0);
  CHECK(rr[2].upper == 1);

  Graph star = rt::star4();
  auto center = exact_reverse_ranks(star, 0);
  CHECK(center[1].dist == 1.0);
  CHECK(center[1].lower == 1);
  CHECK(center[1].upper == 2);

  Graph single(1, {}, false);
  auto self = exact_reverse_ranks(single, 0);
  REQUIRE(self.size() == 1);
  CHECK(self[0].dist == 0.0);
  CHECK(self[0].lower == 0);
  CHECK(self[0].upper == 1);
}

TEST_CASE("rank ranges are consistent with the distance table") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 20; ++trial) {
    RandomGraphOptions opt;
    opt.nodes = 2 + rng() % 40;
    opt.edges = rng() % (3 * opt.nodes);
    opt.directed = trial % 2 == 0;
    opt.seed = rng();
    opt.integer_lengths = true;
    opt.length_max = 3.0;
    Graph g = random_graph(opt);
    auto dist = rt::all_pairs(g);
    for (NodeId z = 0; z < g.node_count(); ++z) {
      ExactRankRow row = exact_ranks_from(g, z);
      for (NodeId u : g.rankees()) {
        CHECK(row.lower[u] < row.upper[u]);
        CHECK(row.upper[u] <= g.rankee_count());
        if (is_unreachable(dist[z][u])) {
          CHECK(is_unreachable(row.dist[u]));
          CHECK(row.upper[u] == g.rankee_count());
        } else {
          auto [strict, closed] = rt::ball_counts(g, dist[z], dist[z][u]);
          CHECK(row.lower[u] == strict);
          CHECK(row.upper[u] == closed);
        }
      }
    }
  }
}

TEST_CASE("exact neighborhood function") {
  Graph path = rt::path3();
  auto steps = exact_neighborhood_function(path, 0);
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].dist == 0.0);
  CHECK(steps[0].closed_count == 1);
  CHECK(steps[1].dist == 1.0);
  CHECK(steps[1].closed_count == 2);
  CHECK(steps[2].dist == 2.0);
  CHECK(steps[2].closed_count == 3);
  CHECK(steps[2].strict_count == 2);

  Graph star = rt::star4();
  auto center = exact_neighborhood_function(star, 0);
  REQUIRE(center.size() == 2);
  CHECK(center[1].dist == 1.0);
  CHECK(center[1].closed_count == 4);

  Graph lonely(3, {{1, 2, 1.0}}, false);
  auto isolated = exact_neighborhood_function(lonely, 0);
  REQUIRE(isolated.size() == 1);
  CHECK(isolated[0].closed_count == 1);
}

TEST_CASE("exact influence examples and monotonicity") {
  Graph star = rt::star4();
  std::vector<NodeId> center{0};
  CHECK(exact_influence(star, center, 2) == 4);
  CHECK(exact_influence(star, {}, 2) == 0);
  // Saturated threshold counts exactly the rankers reaching a seed.
  CHECK(exact_influence(star, center, 99) == 4);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    RandomGraphOptions opt;
    opt.nodes = 3 + rng() % 30;
    opt.edges = rng() % (3 * opt.nodes);
    opt.directed = trial % 2 == 1;
    opt.seed = rng();
    Graph g = random_graph(opt);
    std::vector<NodeId> seeds{static_cast<NodeId>(rng() % g.node_count())};
    std::vector<NodeId> more = seeds;
    more.push_back(static_cast<NodeId>(rng() % g.node_count()));
    std::uint64_t T = 1 + rng() % 6;
    CHECK(exact_influence(g, seeds, T) <= exact_influence(g, more, T));
    CHECK(exact_influence(g, seeds, T) <= exact_influence(g, seeds, T + 2));

    // Agreement with the test-side counting oracle.
    auto dist = rt::all_pairs(g);
    CHECK(exact_influence(g, seeds, T) == rt::brute_influence(g, dist, seeds, T));
  }
}
