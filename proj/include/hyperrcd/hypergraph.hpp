#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "hyperrcd/errors.hpp"

namespace hyperrcd {

using VertexId = std::int32_t;

// Members are stored sorted with duplicates collapsed, so two hyperedges over
// the same vertex set compare equal regardless of input order.
struct Hyperedge {
  std::vector<VertexId> members;

  Hyperedge() = default;
  explicit Hyperedge(std::vector<VertexId> m);

  std::size_t size() const { return members.size(); }
  bool contains(VertexId v) const;

  bool operator==(const Hyperedge& other) const = default;
};

// Weighted hypergraph over dense vertex ids 0..n-1. The incidence structure
// is fixed at construction; algorithms that evolve weights (Ricci flow) pass
// replacement weight vectors around instead of mutating the graph, which keeps
// caching and snapshotting simple.
class Hypergraph {
 public:
  Hypergraph(VertexId num_vertices, std::vector<Hyperedge> edges,
             std::vector<double> weights);

  // Convenience: all weights 1.
  Hypergraph(VertexId num_vertices, std::vector<Hyperedge> edges);

  VertexId num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Hyperedge& edge(int index) const { return edges_[index]; }
  const std::vector<Hyperedge>& edges() const { return edges_; }

  const std::vector<double>& weights() const { return weights_; }
  double weight(int index) const { return weights_[index]; }

  // Indices of hyperedges containing v.
  const std::vector<int>& incident(VertexId v) const { return incidence_[v]; }

  // Sum over hyperedges of size*(size-1)/2 -- the number of vertex-pair
  // transport problems one curvature evaluation touches.
  std::size_t pair_count() const;

  // Sum of all hyperedge sizes.
  std::size_t total_cardinality() const;

 private:
  VertexId n_ = 0;
  std::vector<Hyperedge> edges_;
  std::vector<double> weights_;
  std::vector<std::vector<int>> incidence_;
};

// First violated invariant, if any. `detail` is a one-line description
// naming the offending hyperedge or vertex.
struct Diagnostics {
  bool ok = true;
  ErrorCode code = ErrorCode::InternalError;
  std::string detail;
};

// Checks, in order: every hyperedge has >= 2 members with ids in range,
// every weight is finite and > 0, and the hypergraph is connected (isolated
// vertices count as disconnected). Does not throw.
Diagnostics validate(const Hypergraph& g);

// Same checks; throws Error on the first violation.
void validate_or_throw(const Hypergraph& g);

// Single-source shortest hyperpath distances. Stepping through a hyperedge h
// from any member to any other costs the full weight of h, so this is
// Dijkstra where popping a vertex relaxes every co-member of every incident
// hyperedge. `weights` overrides the graph's stored weights.
std::vector<double> sssp(const Hypergraph& g, std::span<const double> weights,
                         VertexId source);
std::vector<double> sssp(const Hypergraph& g, VertexId source);

// Length of hyperedge `index`: sum of pairwise shortest-path distances
// between its members. Note the metric may route around the hyperedge itself.
double hyperedge_length(const Hypergraph& g, std::span<const double> weights,
                        int index);
double hyperedge_length(const Hypergraph& g, int index);

// Clique expansion: an ordinary weighted graph where each hyperedge h
// contributes weight(h) to every pair of its members; parallel contributions
// sum. Edges come out sorted with u < v.
struct WeightedGraph {
  struct Edge {
    VertexId u;
    VertexId v;
    double w;
  };
  VertexId num_vertices = 0;
  std::vector<Edge> edges;
};

WeightedGraph clique_expansion(const Hypergraph& g);
WeightedGraph clique_expansion(const Hypergraph& g,
                               std::span<const double> weights);

// Lazily materialised all-pairs distances for one fixed weight vector.
// Rows are computed on first touch and shared after that; safe to use from
// several threads.
class DistanceCache {
 public:
  DistanceCache(const Hypergraph& g, std::span<const double> weights);

  const std::vector<double>& row(VertexId source) const;

  double operator()(VertexId u, VertexId v) const {
    return u == v ? 0.0 : row(u)[v];
  }

  // Number of rows computed so far (for tests and budget accounting).
  int rows_computed() const;

 private:
  const Hypergraph& g_;
  std::vector<double> weights_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<std::vector<double>>> rows_;
  mutable int computed_ = 0;
};

}  // namespace hyperrcd
