#pragma once

#include <cstdint>
#include <string>

#include "hyperrcd/hypergraph.hpp"
#include "hyperrcd/metrics.hpp"

namespace hyperrcd {

struct GenParams {
  int n = 100;               // vertex count
  int q = 2;                 // community count
  double avg_degree = 10.0;  // target average vertex degree
  // Target sum of hyperedge sizes; 0 means derive it as avg_degree * n
  // (incidences and degree sum are the same quantity). Takes precedence over
  // avg_degree when set.
  std::size_t total_cardinality = 0;
  double p_intra = 0.8;          // probability a hyperedge stays in one block
  double degree_exponent = 0.0;  // 0 = uniform vertex propensities
  int min_size = 2;
  int max_size = 6;
  std::uint64_t seed = 1;
};

struct GeneratedInstance {
  Hypergraph graph;
  Partition truth;
  // Realized counts, handy for tests and reports.
  int intra_edges = 0;
  int inter_edges = 0;
  int bridge_edges = 0;
};

// Block-model hypergraph: vertices split into q near-equal contiguous
// communities, per-vertex propensities theta_v = u^degree_exponent
// (normalized within each block), then hyperedges sampled until the total
// cardinality target is met. Each hyperedge draws a uniform size from
// [min_size, max_size] and is intra-community with probability p_intra
// (members drawn from one block, theta-proportional, without replacement),
// otherwise spread over at least two blocks. All weights start at 1. A final
// pass stitches any disconnected components together with at most
// max(1, q-1) star-shaped bridging hyperedges so the result validates.
// Deterministic for a fixed parameter set.
GeneratedInstance generate(const GenParams& params);

// The three built-in parameter sweeps. D1 varies average degree 3..30,
// D2 varies p_intra 0.15..0.85, D3 varies n 100..1000.
std::vector<GenParams> series(const std::string& series_id);

}  // namespace hyperrcd
