#include "hyperrcd/detection.hpp"

#include <algorithm>
#include <numeric>

namespace hyperrcd {

namespace {

// Plain union-find, path halving.
struct UnionFind {
  std::vector<VertexId> parent;
  explicit UnionFind(VertexId n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  VertexId find(VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<double> distinct_descending(std::span<const double> weights) {
  std::vector<double> w(weights.begin(), weights.end());
  std::sort(w.begin(), w.end(), std::greater<double>());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

}  // namespace

Hypergraph cut_above(const Hypergraph& g, std::span<const double> weights,
                     double cutoff) {
  std::vector<Hyperedge> kept;
  std::vector<double> kept_w;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (weights[e] <= cutoff) {
      kept.push_back(g.edge(e));
      kept_w.push_back(weights[e]);
    }
  }
  return Hypergraph(g.num_vertices(), std::move(kept), std::move(kept_w));
}

Partition components(const Hypergraph& g) {
  UnionFind uf(g.num_vertices());
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& m = g.edge(e).members;
    for (std::size_t i = 1; i < m.size(); ++i) uf.unite(m[0], m[i]);
  }
  Partition p;
  p.labels.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) p.labels[v] = uf.find(v);
  return canonicalize(p);
}

SweepResult sweep_supervised(const Hypergraph& g,
                             std::span<const double> weights,
                             const Partition& truth) {
  if (truth.size() != static_cast<std::size_t>(g.num_vertices())) {
    fail(ErrorCode::LabelLengthMismatch,
         "ground truth labels " + std::to_string(truth.size()) +
             " vertices, hypergraph has " +
             std::to_string(g.num_vertices()));
  }
  SweepResult result;
  for (double cutoff : distinct_descending(weights)) {
    Partition part = components(cut_above(g, weights, cutoff));
    SweepPoint point{cutoff, part.num_communities(), nmi(part, truth)};
    if (result.points.empty() || point.score > result.best_score()) {
      result.best_index = result.points.size();
      result.best_partition = part;
    }
    result.points.push_back(point);
  }
  return result;
}

SweepResult sweep_unsupervised(const Hypergraph& g,
                               std::span<const double> weights) {
  SweepResult result;
  std::vector<double> cutoffs = distinct_descending(weights);
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    Partition part = components(cut_above(g, weights, cutoffs[i]));
    // Relative gap up to the next larger weight; the no-removal candidate
    // has nothing above it and scores 0.
    double score = i == 0 ? 0.0 : (cutoffs[i - 1] - cutoffs[i]) / cutoffs[i - 1];
    SweepPoint point{cutoffs[i], part.num_communities(), score};
    if (result.points.empty() || point.score > result.best_score()) {
      result.best_index = result.points.size();
      result.best_partition = part;
    }
    result.points.push_back(point);
  }
  return result;
}

DetectResult detect_communities(const Hypergraph& g,
                                const DetectOptions& options,
                                const Partition* truth) {
  if (options.supervised && truth == nullptr) {
    fail(ErrorCode::InfeasibleParams,
         "supervised detection needs ground-truth labels");
  }
  DetectResult out;
  out.trajectory = run_flow(g, options.flow);

  bool have_best = false;
  std::size_t from =
      options.sweep_every_iteration ? 0 : out.trajectory.size() - 1;
  for (std::size_t k = from; k < out.trajectory.size(); ++k) {
    const FlowState& state = out.trajectory[k];
    SweepResult sweep = options.supervised
                            ? sweep_supervised(g, state.weights, *truth)
                            : sweep_unsupervised(g, state.weights);
    if (!have_best || sweep.best_score() > out.score) {
      have_best = true;
      out.score = sweep.best_score();
      out.cutoff = sweep.best_cutoff();
      out.iteration = static_cast<int>(k);
      out.partition = sweep.best_partition;
      out.sweep = std::move(sweep);
    }
  }
  return out;
}

}  // namespace hyperrcd
