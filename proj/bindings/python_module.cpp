#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "revrank/ads.hpp"
#include "revrank/estimators.hpp"
#include "revrank/graph.hpp"
#include "revrank/influence.hpp"
#include "revrank/oracle.hpp"
#include "revrank/random_graph.hpp"
#include "revrank/reverse_rank.hpp"
#include "revrank/sketch_io.hpp"
#include "revrank/version.hpp"

namespace py = pybind11;
using namespace revrank;

namespace {

// Sketches plus the estimation lists derived from them; the unit the file
// format stores and the query operations consume.
struct SketchSet {
  SketchFile file;

  std::uint32_t k() const { return file.sketches.k; }
  std::uint64_t universe() const { return file.sketches.ranks.rankee_count(); }
  const EstimationSet& bottom_k() const { return file.lists(Estimator::bottom_k); }
  const EstimationSet& lists(const std::string& estimator) const {
    return file.lists(estimator == "hip" ? Estimator::hip
                                         : Estimator::bottom_k);
  }
};

RankMode rank_mode_from(const std::string& s) {
  if (s == "upper") return RankMode::upper;
  if (s == "lower+1") return RankMode::lower_plus_one;
  if (s == "midpoint") return RankMode::midpoint;
  throw std::invalid_argument("unknown rank mode: " + s);
}

SketchSet build_sketches(const Graph& g, std::uint32_t k,
                         const std::string& rank_values, std::uint64_t seed,
                         double mu, unsigned workers, bool sequential) {
  auto mode = rank_values == "hash" ? RankAssignment::Mode::hash
                                    : RankAssignment::Mode::permutation;
  if (rank_values != "hash" && rank_values != "permutation")
    throw std::invalid_argument("unknown rank value mode: " + rank_values);
  SketchSet set;
  BuildOptions opt = sequential ? BuildOptions::sequential_build()
                                : BuildOptions::batched(mu, workers);
  set.file.sketches = build_ads(g, k, RankAssignment::make(g, mode, seed), opt);
  set.file.bottom_k =
      build_estimation_lists(set.file.sketches, Estimator::bottom_k);
  set.file.hip = build_estimation_lists(set.file.sketches, Estimator::hip);
  return set;
}

}  // namespace

PYBIND11_MODULE(_revrank, m) {
  m.doc() = "Reverse-rank graph queries over all-distances sketches";
  m.attr("__version__") = kVersion;
  m.attr("UNREACHABLE") = kUnreachable;

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n,
                       const std::vector<std::tuple<std::uint64_t,
                                                    std::uint64_t, double>>& edges,
                       bool directed) {
             std::vector<EdgeInput> in;
             in.reserve(edges.size());
             for (const auto& [u, v, w] : edges) in.push_back({u, v, w});
             return Graph(n, in, directed);
           }),
           py::arg("n"), py::arg("edges"), py::arg("directed") = false)
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("arc_count", &Graph::arc_count)
      .def_property_readonly("directed", &Graph::directed)
      .def_property_readonly("rankees", &Graph::rankees)
      .def_property_readonly("rankers", &Graph::rankers)
      .def("set_rankees", &Graph::set_rankees)
      .def("set_rankers", &Graph::set_rankers)
      .def("external_id", &Graph::external_id)
      .def("dense_id", &Graph::dense_id)
      .def("out_arcs", [](const Graph& g, NodeId v) {
        std::vector<std::pair<NodeId, double>> arcs;
        for (const Arc& a : g.out_arcs(v)) arcs.push_back({a.to, a.length});
        return arcs;
      });

  m.def("load_edge_list", &load_edge_list_file, py::arg("path"),
        py::arg("directed") = false, py::arg("default_length") = 1.0);
  m.def("parse_edge_list", [](const std::string& text, bool directed,
                              double default_length) {
          std::istringstream in(text);
          return load_edge_list(in, directed, default_length);
        },
        py::arg("text"), py::arg("directed") = false,
        py::arg("default_length") = 1.0);
  m.def("random_graph", [](std::size_t nodes, std::size_t edges, bool directed,
                           std::uint64_t seed, double length_min,
                           double length_max, bool integer_lengths) {
          RandomGraphOptions opt{nodes,      edges,      directed, seed,
                                 length_min, length_max, integer_lengths};
          return random_graph(opt);
        },
        py::arg("nodes"), py::arg("edges"), py::arg("directed") = false,
        py::arg("seed") = 0, py::arg("length_min") = 1.0,
        py::arg("length_max") = 1.0, py::arg("integer_lengths") = false);

  m.def("dijkstra", [](const Graph& g, NodeId source, bool transpose) {
          DistanceResult r = dijkstra(g, source, transpose);
          return py::make_tuple(r.dist, r.scan_order);
        },
        py::arg("graph"), py::arg("source"), py::arg("transpose") = false,
        "Exact distances and the settle order (unreachable = inf)");

  m.def("top_rankees", [](const Graph& g, NodeId ranker, std::uint64_t T,
                          const std::string& rank_mode) {
          std::vector<std::pair<NodeId, double>> out;
          for (const TopRankee& t :
               top_rankees(g, ranker, T, rank_mode_from(rank_mode)))
            out.push_back({t.node, t.rank});
          return out;
        },
        py::arg("graph"), py::arg("ranker"), py::arg("T"),
        py::arg("rank_mode") = "upper");

  py::class_<SketchSet>(m, "SketchSet")
      .def_property_readonly("k", &SketchSet::k)
      .def_property_readonly("universe", &SketchSet::universe)
      .def("cardinality",
           [](const SketchSet& s, NodeId node, double dist,
              const std::string& estimator, bool strict) {
             return s.lists(estimator)[node].cardinality_at(dist, strict);
           },
           py::arg("node"), py::arg("dist"), py::arg("estimator") = "bottomk",
           py::arg("strict") = false)
      .def("rank",
           [](const SketchSet& s, NodeId node, double dist,
              const std::string& estimator) {
             RankEstimate est = estimate_rank(s.lists(estimator)[node], dist);
             return py::make_tuple(est.lower, est.upper);
           },
           py::arg("node"), py::arg("dist"), py::arg("estimator") = "bottomk",
           "Rank range (strict, closed) the node assigns at this distance")
      .def("entries",
           [](const SketchSet& s, NodeId node) {
             std::vector<std::tuple<NodeId, double, double, bool>> out;
             for (const AdsEntry& e :
                  s.file.sketches.sketches.at(node).entries())
               out.push_back({e.node, e.r, e.dist, e.auxiliary});
             return out;
           },
           py::arg("node"))
      .def("save", [](const SketchSet& s, const std::string& path) {
        save_sketches_file(path, s.file);
      });

  m.def("build", &build_sketches, py::arg("graph"), py::arg("k"),
        py::arg("rank_values") = "permutation", py::arg("seed") = 1,
        py::arg("mu") = 0.1, py::arg("workers") = 1,
        py::arg("sequential") = false,
        "Build sketches and both estimation lists");
  m.def("load", [](const std::string& path) {
    SketchSet s;
    s.file = load_sketches_file(path);
    return s;
  });

  m.def("reverse_rank",
        [](const Graph& g, const SketchSet& s, const std::vector<NodeId>& seeds,
           std::optional<double> cutoff, std::optional<std::size_t> top,
           bool include_unreachable) {
          std::vector<std::tuple<NodeId, double, double, double>> out;
          for (const RevRankRow& row :
               reverse_rank_rows(g, s.bottom_k(), seeds, cutoff, top,
                                 include_unreachable))
            out.push_back({row.node, row.dist, row.rank.lower, row.rank.upper});
          return out;
        },
        py::arg("graph"), py::arg("sketches"), py::arg("seeds"),
        py::arg("cutoff") = std::nullopt, py::arg("top") = std::nullopt,
        py::arg("include_unreachable") = false,
        "Nodes in nondecreasing (rank estimate, dist) order as "
        "(node, dist, rank_lower, rank_upper)");

  m.def("estimate_influence",
        [](const Graph& g, const SketchSet& s, const std::vector<NodeId>& seeds,
           std::uint64_t T, const std::string& alpha,
           const std::string& rank_mode) {
          InfluenceSpec spec = alpha == "reciprocal"
                                   ? InfluenceSpec::reciprocal_kernel()
                                   : InfluenceSpec::threshold_kernel(T);
          if (alpha != "reciprocal" && alpha != "threshold")
            throw std::invalid_argument("unknown alpha kernel: " + alpha);
          spec.rank_mode = rank_mode_from(rank_mode);
          return estimate_influence(g, s.bottom_k(), seeds, spec);
        },
        py::arg("graph"), py::arg("sketches"), py::arg("seeds"), py::arg("T") = 1,
        py::arg("alpha") = "threshold", py::arg("rank_mode") = "upper");

  m.def("skim_im",
        [](const Graph& g, const SketchSet& s, std::uint64_t T, std::uint32_t K,
           std::uint64_t shuffle_seed, std::size_t max_seeds,
           std::optional<double> coverage) {
          SkimOptions opt;
          opt.T = T;
          opt.K = K;
          opt.shuffle_seed = shuffle_seed;
          opt.max_seeds = max_seeds;
          opt.coverage_target = coverage;
          SkimResult res = skim_im(g, s.bottom_k(), opt);
          std::vector<std::pair<NodeId, std::uint64_t>> out;
          for (const SeedEntry& e : res.seeds.entries)
            out.push_back({e.seed, e.marginal});
          return out;
        },
        py::arg("graph"), py::arg("sketches"), py::arg("T"), py::arg("K") = 512,
        py::arg("shuffle_seed") = 1, py::arg("max_seeds") = 0,
        py::arg("coverage") = std::nullopt,
        "Approximate greedy seed list as (seed, marginal) pairs");

  m.def("exact_greedy_im",
        [](const Graph& g, std::uint64_t T, std::size_t max_seeds,
           const std::string& rank_mode) {
          SeedList seeds =
              exact_greedy_im(g, T, max_seeds, rank_mode_from(rank_mode));
          std::vector<std::pair<NodeId, std::uint64_t>> out;
          for (const SeedEntry& e : seeds.entries)
            out.push_back({e.seed, e.marginal});
          return out;
        },
        py::arg("graph"), py::arg("T"), py::arg("max_seeds") = 0,
        py::arg("rank_mode") = "upper");

  m.def("exact_reverse_ranks",
        [](const Graph& g, NodeId rankee) {
          std::vector<std::tuple<NodeId, double, std::uint64_t, std::uint64_t>>
              out;
          for (const ReverseRankEntry& e : exact_reverse_ranks(g, rankee))
            out.push_back({e.ranker, e.dist, e.lower, e.upper});
          return out;
        },
        py::arg("graph"), py::arg("rankee"),
        "Exact (ranker, dist, rank_lower, rank_upper) rows via full Dijkstra");

  m.def("exact_influence",
        [](const Graph& g, const std::vector<NodeId>& seeds, std::uint64_t T,
           const std::string& rank_mode) {
          return exact_influence(g, seeds, T, rank_mode_from(rank_mode));
        },
        py::arg("graph"), py::arg("seeds"), py::arg("T"),
        py::arg("rank_mode") = "upper");
}
