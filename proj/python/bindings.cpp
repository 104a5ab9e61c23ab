#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "hyperrcd/curvature.hpp"
#include "hyperrcd/detection.hpp"
#include "hyperrcd/errors.hpp"
#include "hyperrcd/flow.hpp"
#include "hyperrcd/io.hpp"
#include "hyperrcd/measure.hpp"
#include "hyperrcd/metrics.hpp"
#include "hyperrcd/pipeline.hpp"
#include "hyperrcd/synthgen.hpp"

namespace py = pybind11;
using namespace hyperrcd;

namespace {

Hypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& edges,
                           std::optional<std::vector<double>> weights) {
  std::vector<Hyperedge> hs;
  hs.reserve(edges.size());
  for (const auto& members : edges) hs.emplace_back(members);
  if (weights) return Hypergraph(n, std::move(hs), std::move(*weights));
  return Hypergraph(n, std::move(hs));
}

// None means "use the weights stored on the hypergraph".
std::vector<double> pick_weights(const Hypergraph& g,
                                 const std::optional<std::vector<double>>& w) {
  return w ? *w : g.weights();
}

py::dict stats_dict(const IngestStats& s) {
  py::dict d;
  d["raw_records"] = s.raw_records;
  d["kept_records"] = s.kept_records;
  d["dropped_small"] = s.dropped_small;
  d["raw_cardinality"] = s.raw_cardinality;
  return d;
}

py::dict curvature_dict(const EdgeCurvature& ec) {
  py::dict d;
  d["edge"] = ec.edge;
  d["weight"] = ec.weight;
  d["wasserstein"] = ec.wasserstein;
  d["length"] = ec.length;
  d["kappa"] = ec.kappa;
  return d;
}

FlowOptions make_flow_options(double alpha, double eta, int iterations,
                              std::optional<double> floor,
                              bool pair_normalized, int threads) {
  FlowOptions opt;
  opt.alpha = alpha;
  opt.eta = eta;
  opt.iterations = iterations;
  if (floor) opt.floor = *floor;
  opt.pair_normalized = pair_normalized;
  opt.threads = threads;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ollivier-Ricci curvature, Ricci flow and community detection on "
            "weighted hypergraphs";

  py::register_exception<Error>(m, "HyperRCDError");

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init(&make_hypergraph), py::arg("n"), py::arg("edges"),
           py::arg("weights") = std::nullopt,
           "Weighted hypergraph on vertices 0..n-1. `edges` is a list of "
           "member-id lists; `weights` defaults to all ones.")
      .def_property_readonly("num_vertices", &Hypergraph::num_vertices)
      .def_property_readonly("num_edges", &Hypergraph::num_edges)
      .def_property_readonly(
          "edges",
          [](const Hypergraph& g) {
            std::vector<std::vector<int>> out;
            out.reserve(g.edges().size());
            for (const Hyperedge& h : g.edges()) out.push_back(h.members);
            return out;
          })
      .def_property_readonly(
          "weights", [](const Hypergraph& g) { return g.weights(); })
      .def("__repr__", [](const Hypergraph& g) {
        return "Hypergraph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def(
      "validate",
      [](const Hypergraph& g) { validate_or_throw(g); }, py::arg("graph"),
      "Raises HyperRCDError unless the hypergraph is connected with "
      "positive weights and every hyperedge has >= 2 in-range members.");

  m.def(
      "load_hypergraph",
      [](const std::string& path, const std::string& format) {
        IngestResult r = format == "auto"
                             ? load_hypergraph(path)
                             : load_hypergraph(path, parse_format(format));
        return py::make_tuple(std::move(r.graph), stats_dict(r.stats));
      },
      py::arg("path"), py::arg("format") = "auto",
      "Reads hg-text, hg-json or hyperedge-list (by extension when format "
      "is 'auto'). Returns (hypergraph, ingest_stats).");

  m.def(
      "load_labels",
      [](const std::string& path) { return load_labels(path).labels; },
      py::arg("path"), "Reads one integer community label per line.");

  m.def(
      "sssp",
      [](const Hypergraph& g, int source,
         std::optional<std::vector<double>> weights) {
        return sssp(g, pick_weights(g, weights), source);
      },
      py::arg("graph"), py::arg("source"), py::arg("weights") = std::nullopt,
      "Shortest-path distances from `source`; stepping between any two "
      "members of a hyperedge costs its full weight.");

  m.def(
      "vertex_measure",
      [](const Hypergraph& g, int x, double alpha,
         std::optional<std::vector<double>> weights) {
        ProbabilityMeasure mu =
            vertex_measure(g, pick_weights(g, weights), x, alpha);
        std::vector<std::pair<int, double>> out;
        out.reserve(mu.support.size());
        for (std::size_t i = 0; i < mu.support.size(); ++i) {
          out.emplace_back(mu.support[i], mu.mass[i]);
        }
        return out;
      },
      py::arg("graph"), py::arg("vertex"), py::arg("alpha"),
      py::arg("weights") = std::nullopt,
      "Lazy random-walk measure at `vertex` as [(vertex, mass), ...]: stay "
      "with probability alpha, else pick an incident hyperedge by weight "
      "and a co-member uniformly.");

  m.def(
      "pair_w1",
      [](const Hypergraph& g, int u, int v, double alpha,
         std::optional<std::vector<double>> weights) {
        CurvatureEngine engine(g, pick_weights(g, weights), alpha);
        return engine.pair_cost(u, v);
      },
      py::arg("graph"), py::arg("u"), py::arg("v"), py::arg("alpha"),
      py::arg("weights") = std::nullopt,
      "Exact 1-Wasserstein distance between the walk measures at u and v.");

  m.def(
      "curvature",
      [](const Hypergraph& g, double alpha,
         std::optional<std::vector<double>> weights, int threads) {
        CurvatureReport rep =
            curvature_report(g, pick_weights(g, weights), alpha, threads);
        py::list out;
        for (const EdgeCurvature& ec : rep.edges) {
          out.append(curvature_dict(ec));
        }
        return out;
      },
      py::arg("graph"), py::arg("alpha") = 0.5,
      py::arg("weights") = std::nullopt, py::arg("threads") = 1,
      "Per-hyperedge curvature: kappa = 1 - W_h/d_h with W_h and d_h the "
      "pairwise-sum transport cost and length.");

  m.def(
      "run_flow",
      [](const Hypergraph& g, double alpha, double eta, int iterations,
         std::optional<double> floor, bool pair_normalized, int threads) {
        auto trajectory = run_flow(
            g, make_flow_options(alpha, eta, iterations, floor,
                                 pair_normalized, threads));
        py::list out;
        for (const FlowState& s : trajectory) {
          py::dict d;
          d["iteration"] = s.iteration;
          d["weights"] = s.weights;
          std::vector<double> kappas;
          kappas.reserve(s.report.edges.size());
          for (const EdgeCurvature& ec : s.report.edges) {
            kappas.push_back(ec.kappa);
          }
          d["kappa"] = std::move(kappas);
          out.append(d);
        }
        return out;
      },
      py::arg("graph"), py::arg("alpha") = 0.5, py::arg("eta") = 0.1,
      py::arg("iterations") = 20, py::arg("floor") = std::nullopt,
      py::arg("pair_normalized") = false, py::arg("threads") = 1,
      "Discrete Ricci flow w += eta*(W_h - d_h), synchronous, clamped at "
      "the floor. Returns the trajectory including iteration 0. Set "
      "pair_normalized on inputs mixing small and large hyperedges.");

  m.def(
      "detect",
      [](const Hypergraph& g, std::optional<std::vector<int>> labels,
         double alpha, double eta, int iterations, std::optional<double> floor,
         bool pair_normalized, bool supervised, bool sweep_every_iteration,
         int threads) {
        DetectOptions opt;
        opt.flow = make_flow_options(alpha, eta, iterations, floor,
                                     pair_normalized, threads);
        opt.supervised = supervised;
        opt.sweep_every_iteration = sweep_every_iteration;
        std::optional<Partition> truth;
        if (labels) truth.emplace(std::move(*labels));
        DetectResult res =
            detect_communities(g, opt, truth ? &*truth : nullptr);
        py::dict d;
        d["labels"] = res.partition.labels;
        d["score"] = res.score;
        d["cutoff"] = res.cutoff;
        d["iteration"] = res.iteration;
        d["num_communities"] =
            res.sweep.points[res.sweep.best_index].num_communities;
        return d;
      },
      py::arg("graph"), py::arg("labels") = std::nullopt,
      py::arg("alpha") = 0.5, py::arg("eta") = 0.1, py::arg("iterations") = 20,
      py::arg("floor") = std::nullopt, py::arg("pair_normalized") = false,
      py::arg("supervised") = true, py::arg("sweep_every_iteration") = false,
      py::arg("threads") = 1,
      "Community detection: Ricci flow, then a cutoff sweep keeping "
      "hyperedges with weight <= cutoff, scored by NMI against `labels` "
      "(supervised) or by the relative weight gap (unsupervised).");

  m.def(
      "nmi",
      [](const std::vector<int>& a, const std::vector<int>& b) {
        return nmi(Partition(a), Partition(b));
      },
      py::arg("labels_a"), py::arg("labels_b"),
      "Normalized mutual information, 2*I/(H(a)+H(b)), natural log.");

  m.def(
      "generate",
      [](int n, int q, double avg_degree, std::size_t total_cardinality,
         double p_intra, double degree_exponent, int min_size, int max_size,
         std::uint64_t seed) {
        GenParams params;
        params.n = n;
        params.q = q;
        params.avg_degree = avg_degree;
        params.total_cardinality = total_cardinality;
        params.p_intra = p_intra;
        params.degree_exponent = degree_exponent;
        params.min_size = min_size;
        params.max_size = max_size;
        params.seed = seed;
        GeneratedInstance inst = generate(params);
        py::dict d;
        d["graph"] = std::move(inst.graph);
        d["labels"] = inst.truth.labels;
        d["intra_edges"] = inst.intra_edges;
        d["inter_edges"] = inst.inter_edges;
        d["bridge_edges"] = inst.bridge_edges;
        return d;
      },
      py::arg("n") = 100, py::arg("q") = 2, py::arg("avg_degree") = 10.0,
      py::arg("total_cardinality") = 0, py::arg("p_intra") = 0.8,
      py::arg("degree_exponent") = 0.0, py::arg("min_size") = 2,
      py::arg("max_size") = 6, py::arg("seed") = 1,
      "Planted-partition hypergraph with q equal blocks; returns the graph, "
      "ground-truth labels and per-kind hyperedge counts.");

  m.attr("__version__") = "0.1.0";
}
