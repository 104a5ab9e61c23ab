#pragma once

#include <span>
#include <vector>

#include "hyperrcd/hypergraph.hpp"

namespace hyperrcd {

// Sparse probability measure attached to a vertex: the one-step distribution
// of the lazy hyperedge random walk. Support is sorted by vertex id and holds
// strictly positive masses only.
struct ProbabilityMeasure {
  VertexId owner = -1;
  double alpha = 0.0;
  std::vector<VertexId> support;
  std::vector<double> mass;  // parallel to support

  double total() const;
  // Mass at v, 0 if v is outside the support.
  double at(VertexId v) const;
};

// Builds the lazy random-walk measure at x: the walker stays put with
// probability alpha, and otherwise picks an incident hyperedge with
// probability proportional to its weight, then one of the other members
// uniformly. Contributions from different hyperedges to the same neighbour
// add up. Requires 0 <= alpha <= 1 and at least one incident hyperedge.
ProbabilityMeasure vertex_measure(const Hypergraph& g,
                                  std::span<const double> weights, VertexId x,
                                  double alpha);
ProbabilityMeasure vertex_measure(const Hypergraph& g, VertexId x,
                                  double alpha);

}  // namespace hyperrcd
