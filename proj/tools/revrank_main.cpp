// revrank: build all-distances sketches over a graph and run reverse-rank
// queries, influence evaluation, and influence maximization on them.

#include <CLI11.hpp>

#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "revrank/ads.hpp"
#include "revrank/estimators.hpp"
#include "revrank/graph.hpp"
#include "revrank/influence.hpp"
#include "revrank/oracle.hpp"
#include "revrank/random_graph.hpp"
#include "revrank/reverse_rank.hpp"
#include "revrank/sketch_io.hpp"
#include "revrank/version.hpp"

namespace fs = std::filesystem;
using namespace revrank;

namespace {

std::string fmt(double v) {
  if (is_unreachable(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Key=value run manifest written next to every subcommand's outputs.
class Manifest {
 public:
  explicit Manifest(std::string subcommand) {
    add("subcommand", std::move(subcommand));
    add("toolkit_version", kVersion);
  }
  void add(const std::string& key, const std::string& value) {
    entries_.push_back({key, value});
  }
  void add(const std::string& key, const char* value) {
    add(key, std::string(value));
  }
  void add(const std::string& key, double value) { add(key, fmt(value)); }
  void add(const std::string& key, std::uint64_t value) {
    add(key, std::to_string(value));
  }
  void add(const std::string& key, bool value) {
    add(key, std::string(value ? "true" : "false"));
  }
  void write(const fs::path& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write manifest: " + path.string());
    for (const auto& [k, v] : entries_) out << k << '=' << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct CommonOptions {
  std::string graph_path;
  bool directed = false;
  double default_length = 1.0;
  std::string out_dir;
  std::string name = "run";

  fs::path out_base() const {
    fs::path dir = out_dir;
    fs::create_directories(dir);
    return dir / name;
  }
  Graph load() const {
    return load_edge_list_file(graph_path, directed, default_length);
  }
  void describe(Manifest& m) const {
    m.add("graph", graph_path);
    m.add("directed", directed);
    m.add("default_length", default_length);
    m.add("output_dir", out_dir);
    m.add("name", name);
  }
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_graph = true) {
  if (needs_graph) {
    cmd->add_option("--graph", opt.graph_path, "edge list file")->required();
    cmd->add_flag("--directed", opt.directed, "treat edges as directed");
    cmd->add_option("--default-length", opt.default_length,
                    "length for edges without one");
  }
  const char* env = std::getenv("REVRANK_OUTPUT_DIR");
  opt.out_dir = env ? env : ".";
  cmd->add_option("--out-dir", opt.out_dir,
                  "output directory (default $REVRANK_OUTPUT_DIR or .)");
  cmd->add_option("--name", opt.name, "basename for output files");
}

std::ofstream open_csv(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write output: " + path.string());
  return out;
}

NodeId resolve_node(const Graph& g, std::uint64_t external) {
  auto id = g.dense_id(external);
  if (!id)
    throw std::runtime_error("node " + std::to_string(external) +
                             " does not appear in the graph");
  return *id;
}

RankMode parse_rank_mode(const std::string& s) {
  if (s == "upper") return RankMode::upper;
  if (s == "lower+1") return RankMode::lower_plus_one;
  if (s == "midpoint") return RankMode::midpoint;
  throw std::runtime_error("unknown rank mode: " + s);
}

// ---------------------------------------------------------------- build --

struct BuildArgs {
  CommonOptions common;
  std::uint32_t k = 16;
  std::string estimator = "both";
  std::string rank_values = "permutation";
  std::uint64_t rank_seed = 1;
  double mu = 0.1;
  unsigned workers = 1;
  bool sequential = false;
};

int run_build(const BuildArgs& a) {
  Graph g = a.common.load();
  auto mode = a.rank_values == "hash" ? RankAssignment::Mode::hash
                                      : RankAssignment::Mode::permutation;
  if (a.rank_values != "hash" && a.rank_values != "permutation")
    throw std::runtime_error("unknown rank value mode: " + a.rank_values);
  if (a.estimator != "both" && a.estimator != "bottomk" && a.estimator != "hip")
    throw std::runtime_error("unknown estimator: " + a.estimator);

  auto ranks = RankAssignment::make(g, mode, a.rank_seed);
  BuildOptions opt = a.sequential ? BuildOptions::sequential_build()
                                  : BuildOptions::batched(a.mu, a.workers);
  BuildStats stats;
  SketchFile file;
  file.sketches = build_ads(g, a.k, ranks, opt, &stats);
  if (a.estimator != "hip")
    file.bottom_k = build_estimation_lists(file.sketches, Estimator::bottom_k);
  if (a.estimator != "bottomk")
    file.hip = build_estimation_lists(file.sketches, Estimator::hip);

  fs::path base = a.common.out_base();
  save_sketches_file(base.string() + ".sketch", file);
  if (g.remapped()) {
    auto out = open_csv(base.string() + ".idmap.csv");
    write_id_map(g, out);
  }

  Manifest m("build");
  a.common.describe(m);
  m.add("k", std::uint64_t{a.k});
  m.add("estimator", a.estimator);
  m.add("rank_values", a.rank_values);
  m.add("rank_seed", a.rank_seed);
  m.add("schedule", a.sequential ? "sequential" : "batched");
  m.add("mu", a.mu);
  m.add("workers", std::uint64_t{a.workers});
  m.add("nodes", std::uint64_t{g.node_count()});
  m.add("arcs", std::uint64_t{g.arc_count()});
  m.add("entries_total", stats.entries_total);
  m.add("entries_auxiliary", stats.entries_auxiliary);
  m.add("overhead_ratio", stats.overhead_ratio);
  m.add("build_seconds", stats.build_seconds);
  m.write(base.string() + ".build.manifest");

  std::cout << "sketches: " << base.string() << ".sketch (entries "
            << stats.entries_total << ", overhead "
            << fmt(stats.overhead_ratio) << ")\n";
  return 0;
}

// ------------------------------------------------------------- rr-query --

struct QueryArgs {
  CommonOptions common;
  std::string sketch_path;
  std::vector<std::uint64_t> sources;
  std::string estimator = "bottomk";
  std::optional<std::uint64_t> top;
  std::optional<double> cutoff;
  bool include_unreachable = false;
};

int run_rr_query(const QueryArgs& a) {
  Graph g = a.common.load();
  SketchFile file = load_sketches_file(a.sketch_path);
  const EstimationSet& order_lists = file.lists(Estimator::bottom_k);
  const EstimationSet& report_lists =
      a.estimator == "hip" ? file.lists(Estimator::hip) : order_lists;

  std::vector<NodeId> seeds;
  for (std::uint64_t s : a.sources) seeds.push_back(resolve_node(g, s));

  std::optional<std::size_t> top;
  if (a.top) top = static_cast<std::size_t>(*a.top);
  auto rows = reverse_rank_rows(g, order_lists, seeds, a.cutoff, top,
                                a.include_unreachable);

  fs::path base = a.common.out_base();
  auto out = open_csv(base.string() + ".rrquery.csv");
  out << "node,dist,rank_lower,rank_upper\n";
  for (const RevRankRow& row : rows) {
    RankEstimate est = a.estimator == "hip"
                           ? estimate_rank(report_lists[row.node], row.dist)
                           : row.rank;
    out << g.external_id(row.node) << ',' << fmt(row.dist) << ','
        << fmt(est.lower) << ',' << fmt(est.upper) << '\n';
  }

  Manifest m("rr-query");
  a.common.describe(m);
  m.add("sketch", a.sketch_path);
  m.add("estimator", a.estimator);
  m.add("rank_seed", file.sketches.ranks.seed());
  m.add("k", std::uint64_t{file.sketches.k});
  std::string srcs;
  for (std::uint64_t s : a.sources)
    srcs += (srcs.empty() ? "" : " ") + std::to_string(s);
  m.add("sources", srcs);
  if (a.top) m.add("top", *a.top);
  if (a.cutoff) m.add("cutoff", *a.cutoff);
  m.add("include_unreachable", a.include_unreachable);
  m.add("rows", std::uint64_t{rows.size()});
  m.write(base.string() + ".rrquery.manifest");

  std::cout << rows.size() << " rows -> " << base.string() << ".rrquery.csv\n";
  return 0;
}

// ---------------------------------------------------- rank-dist/dist-dist --

struct DistArgs {
  CommonOptions common;
  std::string sketch_path;  // rank-dist only
  std::vector<std::uint64_t> sources;
};

int run_rank_dist(const DistArgs& a) {
  Graph g = a.common.load();
  SketchFile file = load_sketches_file(a.sketch_path);
  const EstimationSet& lists = file.lists(Estimator::bottom_k);

  fs::path base = a.common.out_base();
  auto out = open_csv(base.string() + ".rankdist.csv");
  out << "source,position,rank_upper\n";
  for (std::uint64_t src : a.sources) {
    NodeId s = resolve_node(g, src);
    NodeId seeds[] = {s};
    ReverseRankScan scan(g, lists, seeds);
    std::uint64_t position = 0;
    while (auto item = scan.next())
      out << src << ',' << ++position << ',' << fmt(item->rank_est) << '\n';
  }

  Manifest m("rank-dist");
  a.common.describe(m);
  m.add("sketch", a.sketch_path);
  m.add("rank_seed", file.sketches.ranks.seed());
  m.write(base.string() + ".rankdist.manifest");
  std::cout << "rank distribution -> " << base.string() << ".rankdist.csv\n";
  return 0;
}

int run_dist_dist(const DistArgs& a) {
  Graph g = a.common.load();
  fs::path base = a.common.out_base();
  auto out = open_csv(base.string() + ".distdist.csv");
  out << "source,dist,count\n";
  for (std::uint64_t src : a.sources) {
    NodeId s = resolve_node(g, src);
    DistanceResult sp = dijkstra(g, s);
    std::uint64_t count = 0;
    std::size_t i = 0;
    while (i < sp.scan_order.size()) {
      double d = sp.dist[sp.scan_order[i]];
      while (i < sp.scan_order.size() && sp.dist[sp.scan_order[i]] == d) {
        ++count;
        ++i;
      }
      out << src << ',' << fmt(d) << ',' << count << '\n';
    }
  }
  Manifest m("dist-dist");
  a.common.describe(m);
  m.write(base.string() + ".distdist.manifest");
  std::cout << "distance distribution -> " << base.string() << ".distdist.csv\n";
  return 0;
}

// ------------------------------------------------------------- im-* ------

void write_seed_csv(const fs::path& path, const Graph& g, const SeedList& seeds) {
  auto out = open_csv(path);
  out << "seed_external_id,marginal,cumulative,cumulative_fraction\n";
  std::uint64_t cumulative = 0;
  for (const SeedEntry& e : seeds.entries) {
    cumulative += e.marginal;
    out << g.external_id(e.seed) << ',' << e.marginal << ',' << cumulative
        << ',' << fmt(static_cast<double>(cumulative) /
                      static_cast<double>(g.ranker_count()))
        << '\n';
  }
}

struct SkimArgs {
  CommonOptions common;
  std::string sketch_path;
  std::uint64_t T = 1;
  std::uint32_t K = 512;
  std::uint64_t shuffle_seed = 1;
  std::uint64_t max_seeds = 0;
  std::optional<double> coverage;
};

int run_im_skim(const SkimArgs& a) {
  Graph g = a.common.load();
  SketchFile file = load_sketches_file(a.sketch_path);
  const EstimationSet& lists = file.lists(Estimator::bottom_k);

  SkimOptions opt;
  opt.T = a.T;
  opt.K = a.K;
  opt.shuffle_seed = a.shuffle_seed;
  opt.max_seeds = static_cast<std::size_t>(a.max_seeds);
  opt.coverage_target = a.coverage;
  SkimResult res = skim_im(g, lists, opt);

  fs::path base = a.common.out_base();
  write_seed_csv(base.string() + ".seeds.csv", g, res.seeds);

  Manifest m("im-skim");
  a.common.describe(m);
  m.add("sketch", a.sketch_path);
  m.add("rank_seed", file.sketches.ranks.seed());
  m.add("k", std::uint64_t{file.sketches.k});
  m.add("T", a.T);
  m.add("K", std::uint64_t{a.K});
  m.add("shuffle_seed", a.shuffle_seed);
  m.add("max_seeds", a.max_seeds);
  if (a.coverage) m.add("coverage_target", *a.coverage);
  m.add("seeds_selected", std::uint64_t{res.seeds.entries.size()});
  m.add("covered", res.seeds.covered);
  m.write(base.string() + ".imskim.manifest");

  std::cout << res.seeds.entries.size() << " seeds covering "
            << res.seeds.covered << " rankers -> " << base.string()
            << ".seeds.csv\n";
  return 0;
}

struct ExactImArgs {
  CommonOptions common;
  std::uint64_t T = 1;
  std::uint64_t max_seeds = 0;
  std::string rank_mode = "upper";
};

int run_im_exact(const ExactImArgs& a) {
  Graph g = a.common.load();
  SeedList seeds = exact_greedy_im(g, a.T, static_cast<std::size_t>(a.max_seeds),
                                   parse_rank_mode(a.rank_mode));
  fs::path base = a.common.out_base();
  write_seed_csv(base.string() + ".seeds.csv", g, seeds);

  Manifest m("im-exact");
  a.common.describe(m);
  m.add("T", a.T);
  m.add("max_seeds", a.max_seeds);
  m.add("rank_mode", a.rank_mode);
  m.add("seeds_selected", std::uint64_t{seeds.entries.size()});
  m.add("covered", seeds.covered);
  m.write(base.string() + ".imexact.manifest");
  std::cout << seeds.entries.size() << " seeds covering " << seeds.covered
            << " rankers -> " << base.string() << ".seeds.csv\n";
  return 0;
}

// --------------------------------------------------------------- eval ----

struct EvalArgs {
  CommonOptions common;
  std::string sketch_path;
  std::string seed_file;
  std::uint64_t T = 1;
  std::string alpha = "threshold";
  std::string rank_mode = "upper";
};

std::vector<std::uint64_t> read_seed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open seed file: " + path);
  std::vector<std::uint64_t> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    // First comma- or whitespace-separated token; a non-numeric first line
    // is treated as a CSV header.
    std::string token = line.substr(0, line.find_first_of(", \t\r"));
    if (token.empty())
      throw std::runtime_error("seed file: malformed line '" + line + "'");
    try {
      std::size_t used = 0;
      std::uint64_t id = std::stoull(token, &used);
      if (used == token.size()) out.push_back(id);
    } catch (const std::exception&) {
      if (!out.empty() || !std::isalpha(static_cast<unsigned char>(token[0])))
        throw std::runtime_error("seed file: bad node id '" + token + "'");
    }
  }
  if (out.empty()) throw std::runtime_error("seed file holds no node ids");
  return out;
}

int run_eval(const EvalArgs& a) {
  Graph g = a.common.load();
  SketchFile file = load_sketches_file(a.sketch_path);
  const EstimationSet& lists = file.lists(Estimator::bottom_k);

  std::vector<NodeId> seeds;
  for (std::uint64_t s : read_seed_file(a.seed_file))
    seeds.push_back(resolve_node(g, s));

  InfluenceSpec spec = a.alpha == "reciprocal"
                           ? InfluenceSpec::reciprocal_kernel()
                           : InfluenceSpec::threshold_kernel(a.T);
  if (a.alpha != "reciprocal" && a.alpha != "threshold")
    throw std::runtime_error("unknown alpha kernel: " + a.alpha);
  spec.rank_mode = parse_rank_mode(a.rank_mode);

  double estimated = estimate_influence(g, lists, seeds, spec);
  double exact = -1.0;
  fs::path base = a.common.out_base();
  auto out = open_csv(base.string() + ".eval.csv");
  out << "metric,value\n";
  out << "estimated_influence," << fmt(estimated) << '\n';
  if (a.alpha == "threshold") {
    exact = static_cast<double>(
        exact_influence(g, seeds, a.T, parse_rank_mode(a.rank_mode)));
    out << "exact_influence," << fmt(exact) << '\n';
    out << "ratio," << fmt(exact > 0 ? estimated / exact : 0.0) << '\n';
  }

  Manifest m("eval");
  a.common.describe(m);
  m.add("sketch", a.sketch_path);
  m.add("rank_seed", file.sketches.ranks.seed());
  m.add("seed_file", a.seed_file);
  m.add("alpha", a.alpha);
  m.add("T", a.T);
  m.add("rank_mode", a.rank_mode);
  m.write(base.string() + ".eval.manifest");

  std::cout << "estimated=" << fmt(estimated);
  if (exact >= 0) std::cout << " exact=" << fmt(exact);
  std::cout << " -> " << base.string() << ".eval.csv\n";
  return 0;
}

// -------------------------------------------------------------- verify ---

struct VerifyArgs {
  CommonOptions common;  // no graph
  std::uint64_t n = 32;
  std::uint64_t trials = 20;
  std::uint64_t seed = 1;
};

int run_verify(const VerifyArgs& a) {
  std::mt19937_64 rng(a.seed);
  std::uint64_t failures = 0;
  for (std::uint64_t t = 0; t < a.trials; ++t) {
    RandomGraphOptions opt;
    opt.nodes = 2 + rng() % a.n;
    opt.edges = rng() % (4 * opt.nodes);
    opt.directed = t % 2 == 0;
    opt.seed = rng();
    opt.length_min = 1.0;
    opt.length_max = 10.0;
    opt.integer_lengths = true;
    Graph g = random_graph(opt);

    auto ranks = RankAssignment::make(g, RankAssignment::Mode::permutation,
                                      rng());
    AdsSketchSet set =
        build_ads(g, static_cast<std::uint32_t>(g.node_count()), ranks);
    EstimationSet lists = build_estimation_lists(set, Estimator::bottom_k);

    bool ok = true;
    for (NodeId z = 0; z < g.node_count() && ok; ++z) {
      ExactRankRow row = exact_ranks_from(g, z);
      for (NodeId u : g.rankees()) {
        if (is_unreachable(row.dist[u])) continue;
        RankEstimate est = estimate_rank(lists[z], row.dist[u]);
        if (est.lower != static_cast<double>(row.lower[u]) ||
            est.upper != static_cast<double>(row.upper[u])) {
          ok = false;
          break;
        }
      }
    }
    std::printf("trial %llu: n=%zu %s\n",
                static_cast<unsigned long long>(t), g.node_count(),
                ok ? "ok" : "MISMATCH");
    if (!ok) ++failures;
  }
  std::printf("%s\n", failures == 0 ? "PASS" : "FAIL");
  return failures == 0 ? 0 : 1;
}

// --------------------------------------------------------------- bench ---

struct BenchArgs {
  CommonOptions common;
  std::uint32_t k = 16;
  std::uint64_t sources = 50;
  std::uint64_t rank_seed = 1;
  double mu = 0.1;
  unsigned workers = 4;
};

int run_bench(const BenchArgs& a) {
  double t0 = now_seconds();
  Graph g = a.common.load();
  double load_s = now_seconds() - t0;

  auto ranks = RankAssignment::make(g, RankAssignment::Mode::permutation,
                                    a.rank_seed);
  BuildStats seq_stats;
  t0 = now_seconds();
  AdsSketchSet set = build_ads(g, a.k, ranks, {}, &seq_stats);
  double build_seq_s = now_seconds() - t0;

  BuildStats batched_stats;
  t0 = now_seconds();
  AdsSketchSet batched = build_ads(g, a.k, ranks,
                                   BuildOptions::batched(a.mu, a.workers),
                                   &batched_stats);
  double build_batched_s = now_seconds() - t0;

  t0 = now_seconds();
  EstimationSet lists = build_estimation_lists(set, Estimator::bottom_k);
  double lists_s = now_seconds() - t0;

  std::mt19937_64 rng(a.rank_seed);
  std::vector<NodeId> sources;
  for (std::uint64_t i = 0; i < a.sources; ++i)
    sources.push_back(static_cast<NodeId>(rng() % g.node_count()));

  double dijkstra_s = 0.0;
  for (NodeId s : sources) {
    t0 = now_seconds();
    DistanceResult r = dijkstra(g, s, /*use_transpose=*/true);
    dijkstra_s += now_seconds() - t0;
    (void)r;
  }
  dijkstra_s /= static_cast<double>(sources.size());

  double rr_s = 0.0;
  for (NodeId s : sources) {
    NodeId seeds[] = {s};
    t0 = now_seconds();
    ReverseRankScan scan(g, lists, seeds);
    while (scan.next()) {
    }
    rr_s += now_seconds() - t0;
  }
  rr_s /= static_cast<double>(sources.size());

  fs::path base = a.common.out_base();
  auto out = open_csv(base.string() + ".bench.csv");
  out << "metric,value\n";
  out << "load_seconds," << fmt(load_s) << '\n';
  out << "build_sequential_seconds," << fmt(build_seq_s) << '\n';
  out << "build_batched_seconds," << fmt(build_batched_s) << '\n';
  out << "batched_speedup," << fmt(build_seq_s / build_batched_s) << '\n';
  out << "batched_overhead_ratio," << fmt(batched_stats.overhead_ratio) << '\n';
  out << "estimation_lists_seconds," << fmt(lists_s) << '\n';
  out << "dijkstra_mean_seconds," << fmt(dijkstra_s) << '\n';
  out << "rr_query_mean_seconds," << fmt(rr_s) << '\n';
  out << "rr_dijkstra_ratio," << fmt(rr_s / dijkstra_s) << '\n';
  out << "sketch_entries," << seq_stats.entries_total << '\n';

  Manifest m("bench");
  a.common.describe(m);
  m.add("k", std::uint64_t{a.k});
  m.add("rank_seed", a.rank_seed);
  m.add("mu", a.mu);
  m.add("workers", std::uint64_t{a.workers});
  m.add("sources", a.sources);
  m.write(base.string() + ".bench.manifest");

  std::cout << "bench -> " << base.string() << ".bench.csv (rr/dijkstra "
            << fmt(rr_s / dijkstra_s) << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reverse-rank queries and influence maximization over "
               "all-distances sketches"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "build sketches and estimation lists");
  add_common(build, build_args.common);
  build->add_option("--k", build_args.k, "sketch parameter k");
  build->add_option("--estimator", build_args.estimator,
                    "lists to compute: both|bottomk|hip");
  build->add_option("--rank-values", build_args.rank_values,
                    "r-value source: permutation|hash");
  build->add_option("--rank-seed", build_args.rank_seed, "rank assignment seed");
  build->add_option("--mu", build_args.mu, "batch growth parameter");
  build->add_option("--workers", build_args.workers, "batched build threads");
  build->add_flag("--sequential", build_args.sequential,
                  "use the sequential builder");

  QueryArgs query_args;
  auto* rr = app.add_subcommand("rr-query", "sorted reverse-rank stream");
  add_common(rr, query_args.common);
  rr->add_option("--sketch", query_args.sketch_path, "sketch file")->required();
  rr->add_option("--source", query_args.sources,
                 "seed node (repeat for a seed set)")
      ->required();
  rr->add_option("--estimator", query_args.estimator,
                 "rank columns from: bottomk|hip");
  std::uint64_t top_value = 0;
  rr->add_option("--top", top_value, "emit only the first N rows");
  double cutoff_value = 0;
  auto* cutoff_opt =
      rr->add_option("--cutoff", cutoff_value, "stop past this rank estimate");
  rr->add_flag("--include-unreachable", query_args.include_unreachable,
               "append nodes that cannot reach the seeds");

  DistArgs rank_dist_args;
  auto* rank_dist =
      app.add_subcommand("rank-dist", "cumulative reverse-rank distribution");
  add_common(rank_dist, rank_dist_args.common);
  rank_dist->add_option("--sketch", rank_dist_args.sketch_path, "sketch file")
      ->required();
  rank_dist->add_option("--source", rank_dist_args.sources, "source node")
      ->required();

  DistArgs dist_dist_args;
  auto* dist_dist =
      app.add_subcommand("dist-dist", "cumulative distance distribution");
  add_common(dist_dist, dist_dist_args.common);
  dist_dist->add_option("--source", dist_dist_args.sources, "source node")
      ->required();

  SkimArgs skim_args;
  auto* skim = app.add_subcommand("im-skim",
                                  "approximate greedy influence maximization");
  add_common(skim, skim_args.common);
  skim->add_option("--sketch", skim_args.sketch_path, "sketch file")->required();
  skim->add_option("--T", skim_args.T, "rank threshold")->required();
  skim->add_option("--K", skim_args.K, "sample size per candidate");
  skim->add_option("--shuffle-seed", skim_args.shuffle_seed, "sampling shuffle seed");
  skim->add_option("--max-seeds", skim_args.max_seeds, "stop after this many seeds");
  double coverage_value = 0;
  auto* coverage_opt = skim->add_option("--coverage", coverage_value,
                                        "stop at this covered fraction of rankers");

  ExactImArgs exact_args;
  auto* imx = app.add_subcommand("im-exact", "exact greedy influence maximization");
  add_common(imx, exact_args.common);
  imx->add_option("--T", exact_args.T, "rank threshold")->required();
  imx->add_option("--max-seeds", exact_args.max_seeds, "stop after this many seeds");
  imx->add_option("--rank-mode", exact_args.rank_mode,
                  "upper|lower+1|midpoint");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval",
                                  "estimated vs exact influence of a seed file");
  add_common(eval, eval_args.common);
  eval->add_option("--sketch", eval_args.sketch_path, "sketch file")->required();
  eval->add_option("--seeds", eval_args.seed_file, "seed list or seeds.csv")
      ->required();
  eval->add_option("--T", eval_args.T, "rank threshold");
  eval->add_option("--alpha", eval_args.alpha, "threshold|reciprocal");
  eval->add_option("--rank-mode", eval_args.rank_mode, "upper|lower+1|midpoint");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify",
                                    "compare sketch ranks to the exact oracle");
  add_common(verify, verify_args.common, /*needs_graph=*/false);
  verify->add_option("--n", verify_args.n, "max nodes per trial graph");
  verify->add_option("--trials", verify_args.trials, "number of random graphs");
  verify->add_option("--seed", verify_args.seed, "trial generator seed");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "build and query timings");
  add_common(bench, bench_args.common);
  bench->add_option("--k", bench_args.k, "sketch parameter k");
  bench->add_option("--sources", bench_args.sources, "number of query sources");
  bench->add_option("--rank-seed", bench_args.rank_seed, "rank assignment seed");
  bench->add_option("--mu", bench_args.mu, "batch growth parameter");
  bench->add_option("--workers", bench_args.workers, "batched build threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return run_build(build_args);
    if (*rr) {
      if (top_value > 0) query_args.top = top_value;
      if (cutoff_opt->count() > 0) query_args.cutoff = cutoff_value;
      return run_rr_query(query_args);
    }
    if (*rank_dist) return run_rank_dist(rank_dist_args);
    if (*dist_dist) return run_dist_dist(dist_dist_args);
    if (*skim) {
      if (coverage_opt->count() > 0) skim_args.coverage = coverage_value;
      return run_im_skim(skim_args);
    }
    if (*imx) return run_im_exact(exact_args);
    if (*eval) return run_eval(eval_args);
    if (*verify) return run_verify(verify_args);
    if (*bench) return run_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
