#pragma once

#include <optional>

#include "hyperrcd/curvature.hpp"

namespace hyperrcd {

struct FlowOptions {
  double alpha = 0.5;
  double eta = 0.1;
  int iterations = 20;
  // Weights are clamped from below at this value; when unset it defaults to
  // 1e-6 times the smallest initial weight. The discrete update can overshoot
  // past zero, which the continuous flow never does, and a nonpositive weight
  // would break the metric.
  std::optional<double> floor;
  // Divide each hyperedge's step by its member-pair count, turning the raw
  // pair-sum update into a pair-mean one. The raw step magnitude grows like
  // s^2 in the hyperedge size, so on inputs that mix small and large
  // hyperedges the size factor swamps the curvature signal and the largest
  // edges crash to the floor in one step regardless of how curved they are.
  // Normalizing makes decay rates comparable across sizes; on uniform-size
  // inputs it only rescales eta.
  bool pair_normalized = false;
  int threads = 1;
};

struct FlowState {
  int iteration = 0;
  std::vector<double> weights;
  CurvatureReport report;  // curvatures evaluated at `weights`
  double eta = 0.1;
  double floor = 0.0;
  bool pair_normalized = false;
};

// State at iteration 0: initial weights plus their curvature report.
FlowState flow_begin(const Hypergraph& g, const FlowOptions& options);

// One synchronous update: w <- w + eta * (W_h - d_h), every hyperedge fed
// from the same snapshot, then clamped at the floor. Throws NonFiniteWeight
// if the update diverges.
FlowState flow_step(const Hypergraph& g, const FlowState& state,
                    int threads = 1);

// Full trajectory [state_0, ..., state_K].
std::vector<FlowState> run_flow(const Hypergraph& g,
                                const FlowOptions& options);

}  // namespace hyperrcd
