#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "hyperrcd/measure.hpp"
#include "hyperrcd/transport.hpp"

namespace hyperrcd {

struct EdgeCurvature {
  int edge = -1;
  double weight = 0.0;       // weight the evaluation used
  double wasserstein = 0.0;  // W_h: sum of pairwise W1 between member measures
  double length = 0.0;       // d_h: sum of pairwise member distances
  double kappa = 0.0;        // 1 - W_h / d_h
};

struct CurvatureReport {
  double alpha = 0.0;
  std::vector<EdgeCurvature> edges;
};

// Evaluates curvature for one frozen weight vector. Caches three layers that
// overlap heavily across hyperedges: shortest-path rows, vertex measures, and
// pairwise W1 values. Vertices with identical incidence lists are
// interchangeable under a hypergraph automorphism, so pairwise W1 values are
// looked up through a canonical representative pair; this collapses most of
// the work on datasets with many duplicate-profile vertices.
//
// Results are bitwise reproducible for any thread count: per-edge sums run
// in a fixed member order and every cached value is the output of the same
// deterministic solver call.
class CurvatureEngine {
 public:
  CurvatureEngine(const Hypergraph& g, std::span<const double> weights,
                  double alpha, int threads = 1);

  CurvatureEngine(const CurvatureEngine&) = delete;
  CurvatureEngine& operator=(const CurvatureEngine&) = delete;

  const Hypergraph& graph() const { return g_; }
  double alpha() const { return alpha_; }
  DistanceCache& distances() { return dist_; }

  const ProbabilityMeasure& measure(VertexId x);

  // W1 between the measures at u and v (0 when u == v).
  double pair_cost(VertexId u, VertexId v);

  EdgeCurvature edge_curvature(int index);

  // All hyperedges; `threads` > 1 splits the edge list.
  CurvatureReport all();

  // Introspection for tests.
  std::size_t pair_cache_size() const;
  VertexId representative(VertexId v) const { return twin_rep_[v]; }

 private:
  std::pair<VertexId, VertexId> canonical_pair(VertexId u, VertexId v) const;

  const Hypergraph& g_;
  std::vector<double> weights_;
  double alpha_;
  int threads_;
  DistanceCache dist_;
  std::vector<VertexId> twin_rep_;     // canonical vertex per incidence class
  std::vector<VertexId> twin_second_;  // second member of the class, or -1
  mutable std::mutex measure_mu_;
  std::vector<std::unique_ptr<ProbabilityMeasure>> measures_;
  mutable std::mutex pair_mu_;
  std::unordered_map<std::uint64_t, double> pair_cache_;
};

// One-shot helpers.
EdgeCurvature hyperedge_curvature(const Hypergraph& g,
                                  std::span<const double> weights, double alpha,
                                  int index);
CurvatureReport curvature_report(const Hypergraph& g,
                                 std::span<const double> weights, double alpha,
                                 int threads = 1);
CurvatureReport curvature_report(const Hypergraph& g, double alpha,
                                 int threads = 1);

}  // namespace hyperrcd
