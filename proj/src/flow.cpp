#include "hyperrcd/flow.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace hyperrcd {

namespace {

double default_floor(const std::vector<double>& w0) {
  double mn = *std::min_element(w0.begin(), w0.end());
  return 1e-6 * mn;
}

}  // namespace

FlowState flow_begin(const Hypergraph& g, const FlowOptions& options) {
  validate_or_throw(g);
  if (!(options.eta > 0.0) || !std::isfinite(options.eta)) {
    fail(ErrorCode::InfeasibleParams,
         "step size eta must be positive and finite");
  }
  FlowState s;
  s.iteration = 0;
  s.weights = g.weights();
  s.eta = options.eta;
  s.floor = options.floor.value_or(default_floor(s.weights));
  if (!(s.floor > 0.0)) {
    fail(ErrorCode::InfeasibleParams, "weight floor must be positive");
  }
  s.pair_normalized = options.pair_normalized;
  s.report = curvature_report(g, s.weights, options.alpha, options.threads);
  return s;
}

FlowState flow_step(const Hypergraph& g, const FlowState& state, int threads) {
  FlowState next;
  next.iteration = state.iteration + 1;
  next.eta = state.eta;
  next.floor = state.floor;
  next.pair_normalized = state.pair_normalized;
  next.weights.resize(state.weights.size());
  for (std::size_t e = 0; e < state.weights.size(); ++e) {
    const EdgeCurvature& ec = state.report.edges[e];
    double delta = state.eta * (ec.wasserstein - ec.length);
    if (state.pair_normalized) {
      double s = static_cast<double>(g.edge(static_cast<int>(e)).size());
      delta /= 0.5 * s * (s - 1.0);
    }
    // Sign semantics straight from the update rule: positive curvature means
    // W_h < d_h, so the weight shrinks; negative curvature stretches it.
    assert(!(ec.kappa > 0.0 && delta > 0.0));
    assert(!(ec.kappa < 0.0 && delta < 0.0));
    double w = state.weights[e] + delta;
    if (!std::isfinite(w)) {
      fail(ErrorCode::NonFiniteWeight,
           "flow diverged at iteration " + std::to_string(next.iteration) +
               ", hyperedge " + std::to_string(e));
    }
    next.weights[e] = std::max(w, state.floor);
  }
  next.report =
      curvature_report(g, next.weights, state.report.alpha, threads);
  return next;
}

std::vector<FlowState> run_flow(const Hypergraph& g,
                                const FlowOptions& options) {
  if (options.iterations < 0) {
    fail(ErrorCode::InfeasibleParams, "iteration count must be >= 0");
  }
  std::vector<FlowState> trajectory;
  trajectory.reserve(static_cast<std::size_t>(options.iterations) + 1);
  trajectory.push_back(flow_begin(g, options));
  for (int k = 0; k < options.iterations; ++k) {
    trajectory.push_back(flow_step(g, trajectory.back(), options.threads));
  }
  return trajectory;
}

}  // namespace hyperrcd
