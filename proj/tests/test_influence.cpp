#include <doctest.h>

#include <algorithm>
#include <random>

#include "revrank/influence.hpp"
#include "revrank/oracle.hpp"
#include "revrank/random_graph.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace revrank;
namespace rt = revrank::testing;

namespace {

EstimationSet exact_lists(const Graph& g, std::uint64_t seed = 1) {
  auto ranks = RankAssignment::make(g, RankAssignment::Mode::permutation, seed);
  AdsSketchSet set = build_ads(g, static_cast<std::uint32_t>(g.node_count()),
                               ranks);
  return build_estimation_lists(set, Estimator::bottom_k);
}

EstimationSet sketch_lists(const Graph& g, std::uint32_t k,
                           std::uint64_t seed) {
  auto ranks = RankAssignment::make(g, RankAssignment::Mode::permutation, seed);
  AdsSketchSet set = build_ads(g, k, ranks);
  return build_estimation_lists(set, Estimator::bottom_k);
}

}  // namespace

TEST_CASE("estimated influence on the star graph") {
  Graph g = rt::star4();
  EstimationSet lists = exact_lists(g);
  std::vector<NodeId> center{0};

  CHECK(estimate_influence(g, lists, center,
                           InfluenceSpec::threshold_kernel(2)) == 4.0);
  CHECK(estimate_influence(g, lists, center,
                           InfluenceSpec::reciprocal_kernel()) ==
        doctest::Approx(1.0 + 3.0 * 0.5));

  // A leaf seed with T=1 covers nothing among the other rankers.
  Graph restricted = rt::star4();
  restricted.set_rankers({0, 2, 3});
  EstimationSet lists2 = exact_lists(restricted);
  std::vector<NodeId> leaf{1};
  CHECK(estimate_influence(restricted, lists2, leaf,
                           InfluenceSpec::threshold_kernel(1)) == 0.0);
}

TEST_CASE("rank mode resolution changes tie handling") {
  // Seed = leaf 2 of the star, T = 3. The center sees it in range (1,4],
  // the other leaves in (2,4]: the three modes count 1, 4, and 2 rankers.
  Graph g = rt::star4();
  EstimationSet lists = exact_lists(g);
  std::vector<NodeId> seeds{2};

  CHECK(exact_influence(g, seeds, 3, RankMode::upper) == 1);
  CHECK(exact_influence(g, seeds, 3, RankMode::lower_plus_one) == 4);
  CHECK(exact_influence(g, seeds, 3, RankMode::midpoint) == 2);

  // The estimated path always cuts the traversal at stream rank > T, and
  // the stream is keyed by the closed-neighborhood estimate. Nodes whose
  // resolved rank is within T but whose upper estimate is not never get
  // emitted, so the non-upper modes see only the emitted prefix here.
  auto spec = InfluenceSpec::threshold_kernel(3, RankMode::upper);
  CHECK(estimate_influence(g, lists, seeds, spec) == 1.0);
  spec.rank_mode = RankMode::lower_plus_one;
  CHECK(estimate_influence(g, lists, seeds, spec) == 1.0);
  spec.rank_mode = RankMode::midpoint;
  CHECK(estimate_influence(g, lists, seeds, spec) == 1.0);

  // With a saturated threshold the modes resolve fully.
  spec.rank_mode = RankMode::lower_plus_one;
  spec.threshold = 4;
  CHECK(estimate_influence(g, lists, seeds, spec) == 4.0);
}

TEST_CASE("bichromatic model: rankee content, ranker users") {
  // Center 0 is the only rankee; the leaves are the rankers.
  Graph g = rt::star4();
  g.set_rankees({0});
  g.set_rankers({1, 2, 3});
  EstimationSet lists = exact_lists(g);
  std::vector<NodeId> seeds{0};

  // Each leaf has exactly one rankee within distance 1.
  CHECK(exact_influence(g, seeds, 1) == 3);
  CHECK(estimate_influence(g, lists, seeds,
                           InfluenceSpec::threshold_kernel(1)) == 3.0);

  SeedList greedy = exact_greedy_im(g, 1);
  REQUIRE(greedy.entries.size() == 1);
  CHECK(greedy.entries[0].seed == 0);
  CHECK(greedy.entries[0].marginal == 3);

  SkimOptions so;
  so.T = 1;
  so.K = 16;
  so.shuffle_seed = 4;
  SkimResult skim = skim_im(g, lists, so);
  REQUIRE(skim.seeds.entries.size() == 1);
  CHECK(skim.seeds.entries[0].seed == 0);
  CHECK(skim.seeds.entries[0].marginal == 3);

  // Sketches hold rankee entries only.
  auto ranks = RankAssignment::make(g, RankAssignment::Mode::permutation, 0);
  AdsSketchSet set = build_ads(g, 4, ranks);
  for (NodeId v = 0; v < 4; ++v)
    for (const AdsEntry& e : set.sketches[v].entries())
      CHECK(e.node == 0);
}

TEST_CASE("table kernel influence") {
  Graph g = rt::star4();
  EstimationSet lists = exact_lists(g);
  InfluenceSpec spec;
  spec.alpha = InfluenceSpec::Alpha::table;
  spec.table = {1.0, 0.5};  // rank 1 counts fully, rank 2 half
  std::vector<NodeId> center{0};
  // Center at rank 1, each leaf at rank 2.
  CHECK(estimate_influence(g, lists, center, spec) == 1.0 + 3 * 0.5);

  spec.beta.assign(4, 1.0);
  spec.beta[1] = 0.0;  // drop one leaf's weight
  CHECK(estimate_influence(g, lists, center, spec) == 1.0 + 2 * 0.5);
}

TEST_CASE("influence spec validation and kernels") {
  InfluenceSpec bad;
  bad.alpha = InfluenceSpec::Alpha::table;
  bad.table = {0.5, 1.0};  // increasing
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  InfluenceSpec table;
  table.alpha = InfluenceSpec::Alpha::table;
  table.table = {1.0, 0.25, 0.0};
  table.validate();
  CHECK(table.alpha_at(1.0) == 1.0);
  CHECK(table.alpha_at(1.5) == 0.25);
  CHECK(table.alpha_at(2.0) == 0.25);
  CHECK(table.alpha_at(3.0) == 0.0);
  CHECK(table.alpha_at(9.0) == 0.0);
  CHECK(table.support_cutoff() == 2.0);

  CHECK(InfluenceSpec::threshold_kernel(5).support_cutoff() == 5.0);
  CHECK_FALSE(InfluenceSpec::reciprocal_kernel().support_cutoff().has_value());
  CHECK_THROWS_AS(InfluenceSpec::threshold_kernel(0).validate(),
                  std::invalid_argument);
}

TEST_CASE("estimated influence counts the emitted stream prefix") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 15; ++trial) {
    RandomGraphOptions opt;
    opt.nodes = 4 + rng() % 60;
    opt.edges = rng() % (4 * opt.nodes);
    opt.directed = trial % 2 == 0;
    opt.seed = rng();
    opt.integer_lengths = true;
    opt.length_max = 3.0;
    Graph g = random_graph(opt);
    EstimationSet lists = sketch_lists(g, 2 + rng() % 8, rng());
    std::vector<NodeId> seeds{static_cast<NodeId>(rng() % g.node_count())};
    std::uint64_t T = 1 + rng() % 8;

    double inf =
        estimate_influence(g, lists, seeds, InfluenceSpec::threshold_kernel(T));
    auto rows = reverse_rank_rows(g, lists, seeds, static_cast<double>(T));
    std::size_t emitted_in_range = 0;
    for (const auto& row : rows)
      if (row.rank.upper <= static_cast<double>(T)) ++emitted_in_range;
    CHECK(inf == static_cast<double>(emitted_in_range));
  }
}

TEST_CASE("exact greedy on the stock fixtures") {
  Graph star = rt::star4();
  SeedList by_two = exact_greedy_im(star, 2);
  REQUIRE(by_two.entries.size() == 1);
  CHECK(by_two.entries[0].seed == 0);
  CHECK(by_two.entries[0].marginal == 4);
  CHECK(by_two.covered == 4);

  SeedList by_one = exact_greedy_im(star, 1);
  REQUIRE(by_one.entries.size() == 4);
  for (const SeedEntry& e : by_one.entries) CHECK(e.marginal == 1);

  Graph pairs(4, {{0, 1, 1.0}, {2, 3, 1.0}}, false);
  SeedList two_edges = exact_greedy_im(pairs, 2);
  REQUIRE(two_edges.entries.size() >= 2);
  CHECK(two_edges.entries[0].marginal == 2);
  CHECK(two_edges.entries[1].marginal == 2);
  CHECK(two_edges.covered == 4);

  CHECK_THROWS_AS(exact_greedy_im(star, 0), std::invalid_argument);
}

TEST_CASE("exact greedy respects max_seeds and marginals are nonincreasing") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    RandomGraphOptions opt;
    opt.nodes = 4 + rng() % 40;
    opt.edges = rng() % (3 * opt.nodes);
    opt.directed = trial % 2 == 1;
    opt.seed = rng();
    Graph g = random_graph(opt);
    SeedList full = exact_greedy_im(g, 3);
    for (std::size_t i = 1; i < full.entries.size(); ++i)
      CHECK(full.entries[i - 1].marginal >= full.entries[i].marginal);
    std::uint64_t sum = 0;
    for (const SeedEntry& e : full.entries) sum += e.marginal;
    CHECK(sum == full.covered);

    SeedList capped = exact_greedy_im(g, 3, 2);
    CHECK(capped.entries.size() <= 2);
  }
}

TEST_CASE("greedy prefix guarantee against the enumerated optimum") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 25; ++trial) {
    RandomGraphOptions opt;
    opt.nodes = 3 + rng() % 10;  // n <= 12
    opt.edges = rng() % (3 * opt.nodes);
    opt.directed = trial % 2 == 0;
    opt.seed = rng();
    opt.integer_lengths = trial % 3 == 0;
    opt.length_max = 2.0;
    Graph g = random_graph(opt);
    std::uint64_t T = 1 + rng() % 3;
    auto dist = rt::all_pairs(g);
    SeedList greedy = exact_greedy_im(g, T);

    for (std::size_t s = 1; s <= 3; ++s) {
      std::vector<NodeId> prefix;
      for (std::size_t i = 0; i < std::min(s, greedy.entries.size()); ++i)
        prefix.push_back(greedy.entries[i].seed);
      std::uint64_t achieved = rt::brute_influence(g, dist, prefix, T);
      std::uint64_t optimum = rt::optimum_influence(g, dist, s, T);
      double floor = 1.0 - std::pow(1.0 - 1.0 / static_cast<double>(s),
                                    static_cast<double>(s));
      CHECK(static_cast<double>(achieved) >=
            floor * static_cast<double>(optimum));
    }
  }
}

TEST_CASE("skim selects the star center first") {
  Graph g = rt::star4();
  EstimationSet lists = exact_lists(g);
  SkimOptions opt;
  opt.T = 2;
  opt.K = 64;  // over |Z|: selection falls back to argmax
  opt.shuffle_seed = 3;
  SkimResult res = skim_im(g, lists, opt);
  REQUIRE(!res.seeds.entries.empty());
  CHECK(res.seeds.entries[0].seed == 0);
  CHECK(res.seeds.entries[0].marginal == 4);
  SeedList exact = exact_greedy_im(g, 2);
  CHECK(res.seeds.entries[0].marginal == exact.entries[0].marginal);
}

TEST_CASE("skim is deterministic for fixed seeds") {
  RandomGraphOptions opt;
  opt.nodes = 200;
  opt.edges = 800;
  opt.seed = 11;
  Graph g = random_graph(opt);
  EstimationSet lists = sketch_lists(g, 16, 5);
  SkimOptions so;
  so.T = 8;
  so.K = 32;
  so.shuffle_seed = 99;
  SkimResult a = skim_im(g, lists, so);
  SkimResult b = skim_im(g, lists, so);
  REQUIRE(a.seeds.entries.size() == b.seeds.entries.size());
  for (std::size_t i = 0; i < a.seeds.entries.size(); ++i) {
    CHECK(a.seeds.entries[i].seed == b.seeds.entries[i].seed);
    CHECK(a.seeds.entries[i].marginal == b.seeds.entries[i].marginal);
  }
}

TEST_CASE("skim accounting and stop rules") {
  std::mt19937_64 rng(414);
  for (int trial = 0; trial < 10; ++trial) {
    RandomGraphOptions opt;
    opt.nodes = 30 + rng() % 100;
    opt.edges = 4 * opt.nodes;
    opt.directed = trial % 2 == 0;
    opt.seed = rng();
    Graph g = random_graph(opt);
    EstimationSet lists = sketch_lists(g, 8, rng());
    SkimOptions so;
    so.T = 4;
    so.K = 16;
    so.shuffle_seed = rng();
    SkimResult res = skim_im(g, lists, so);

    std::uint64_t sum = 0;
    std::uint64_t covered_nodes = 0;
    for (const SeedEntry& e : res.seeds.entries) {
      CHECK(e.marginal > 0);  // never a useless seed while options remain
      sum += e.marginal;
    }
    for (NodeId z : g.rankers())
      if (res.best_seed[z].covered()) ++covered_nodes;
    CHECK(sum == res.seeds.covered);
    CHECK(sum == covered_nodes);

    so.max_seeds = 2;
    SkimResult capped = skim_im(g, lists, so);
    CHECK(capped.seeds.entries.size() <= 2);

    so.max_seeds = 0;
    so.coverage_target = 0.3;
    SkimResult partial = skim_im(g, lists, so);
    if (res.seeds.covered >=
        static_cast<std::uint64_t>(0.3 * g.ranker_count()))
      CHECK(partial.seeds.covered >=
            static_cast<std::uint64_t>(0.3 * g.ranker_count()));
  }
}

TEST_CASE("best-seed table matches recomputation from scratch") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    RandomGraphOptions opt;
    opt.nodes = 10 + rng() % 50;
    opt.edges = 3 * opt.nodes;
    opt.directed = trial % 2 == 1;
    opt.seed = rng();
    opt.integer_lengths = true;
    opt.length_max = 2.0;
    Graph g = random_graph(opt);
    EstimationSet lists = sketch_lists(g, 4 + rng() % 8, rng());
    SkimOptions so;
    so.T = 1 + rng() % 6;
    so.K = 8;
    so.shuffle_seed = rng();
    SkimResult res = skim_im(g, lists, so);

    // Replaying each prefix leaves the same table as recomputing minima
    // over the prefix seeds directly.
    for (std::size_t len = 1; len <= res.seeds.entries.size(); ++len) {
      so.max_seeds = len;
      SkimResult prefix = skim_im(g, lists, so);
      REQUIRE(prefix.seeds.entries.size() == len);
      for (std::size_t i = 0; i < len; ++i)
        CHECK(prefix.seeds.entries[i].seed == res.seeds.entries[i].seed);

      for (NodeId v = 0; v < g.node_count(); ++v) {
        double best_rank = kUnreachable;
        double best_dist = kUnreachable;
        for (std::size_t i = 0; i < len; ++i) {
          NodeId s = prefix.seeds.entries[i].seed;
          DistanceResult d = dijkstra(g, s, /*use_transpose=*/true);
          if (is_unreachable(d.dist[v])) continue;
          double rank = lists[v].cardinality_at(d.dist[v], false);
          if (rank <= static_cast<double>(so.T)) {
            if (rank < best_rank ||
                (rank == best_rank && d.dist[v] < best_dist)) {
              best_rank = rank;
              best_dist = d.dist[v];
            }
          }
        }
        if (is_unreachable(best_rank)) {
          CHECK_FALSE(prefix.best_seed[v].covered());
        } else {
          CHECK(prefix.best_seed[v].rank == best_rank);
          CHECK(prefix.best_seed[v].dist == best_dist);
        }
      }
    }
  }
}

TEST_CASE("skim with saturated samples tracks exact greedy") {
  std::mt19937_64 rng(31415);
  for (int trial = 0; trial < 6; ++trial) {
    RandomGraphOptions opt;
    opt.nodes = 40 + rng() % 120;
    opt.edges = 4 * opt.nodes;
    opt.directed = trial % 2 == 0;
    opt.seed = rng();
    Graph g = random_graph(opt);
    EstimationSet lists = exact_lists(g, rng());
    std::uint64_t T = 4;

    SkimOptions so;
    so.T = T;
    so.K = 4096;  // >= |Z|: samples saturate, selection is exact greedy
    so.shuffle_seed = rng();
    SkimResult skim = skim_im(g, lists, so);
    SeedList greedy = exact_greedy_im(g, T);
    REQUIRE(!greedy.entries.empty());
    CHECK(skim.seeds.entries[0].marginal == greedy.entries[0].marginal);
    CHECK(skim.seeds.covered == greedy.covered);
  }
}

TEST_CASE("skim parameter validation") {
  Graph g = rt::star4();
  EstimationSet lists = exact_lists(g);
  SkimOptions so;
  so.K = 0;
  CHECK_THROWS_AS(skim_im(g, lists, so), std::invalid_argument);
  so.K = 1;
  so.T = 0;
  CHECK_THROWS_AS(skim_im(g, lists, so), std::invalid_argument);
  so.T = 1;
  so.coverage_target = 1.5;
  CHECK_THROWS_AS(skim_im(g, lists, so), std::invalid_argument);
}
