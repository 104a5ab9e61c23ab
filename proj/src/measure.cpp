#include "hyperrcd/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hyperrcd {

double ProbabilityMeasure::total() const {
  double t = 0.0;
  for (double m : mass) t += m;
  return t;
}

double ProbabilityMeasure::at(VertexId v) const {
  auto it = std::lower_bound(support.begin(), support.end(), v);
  if (it == support.end() || *it != v) return 0.0;
  return mass[static_cast<std::size_t>(it - support.begin())];
}

ProbabilityMeasure vertex_measure(const Hypergraph& g,
                                  std::span<const double> weights, VertexId x,
                                  double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {  // catches NaN too
    fail(ErrorCode::AlphaOutOfRange,
         "alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  if (x < 0 || x >= g.num_vertices()) {
    fail(ErrorCode::InternalError,
         "measure owner " + std::to_string(x) + " out of range");
  }

  double strength = 0.0;  // total incident weight
  for (int e : g.incident(x)) strength += weights[e];
  if (!(strength > 0.0)) {
    fail(ErrorCode::Disconnected,
         "vertex " + std::to_string(x) +
             " has no incident hyperedge with positive weight");
  }

  // Neighbour masses, keyed by vertex so multi-edge contributions merge.
  std::map<VertexId, double> out;
  if (alpha < 1.0) {
    for (int e : g.incident(x)) {
      const auto& members = g.edge(e).members;
      double share =
          (1.0 - alpha) * weights[e] /
          (strength * static_cast<double>(members.size() - 1));
      for (VertexId z : members) {
        if (z != x) out[z] += share;
      }
    }
  }
  if (alpha > 0.0) out[x] += alpha;

  ProbabilityMeasure mu;
  mu.owner = x;
  mu.alpha = alpha;
  mu.support.reserve(out.size());
  mu.mass.reserve(out.size());
  double total = 0.0;
  for (const auto& [v, m] : out) total += m;
  if (std::abs(total - 1.0) > 1e-9) {
    fail(ErrorCode::InternalError,
         "vertex measure summed to " + std::to_string(total) +
             " before normalisation; incidence data is inconsistent");
  }
  // Divide out the rounding residue so downstream balance checks see
  // totals equal to 1 at full double precision.
  for (const auto& [v, m] : out) {
    mu.support.push_back(v);
    mu.mass.push_back(m / total);
  }
  return mu;
}

ProbabilityMeasure vertex_measure(const Hypergraph& g, VertexId x,
                                  double alpha) {
  return vertex_measure(g, g.weights(), x, alpha);
}

}  // namespace hyperrcd
