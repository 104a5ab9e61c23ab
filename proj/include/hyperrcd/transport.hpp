#pragma once

#include <functional>
#include <vector>

#include "hyperrcd/measure.hpp"

namespace hyperrcd {

// Ground metric callback: distance between two vertices. Must be symmetric,
// nonnegative and satisfy the triangle inequality for the duality gap
// guarantees to hold.
using DistanceFn = std::function<double(VertexId, VertexId)>;

struct TransportEntry {
  VertexId from;
  VertexId to;
  double amount;
};

// Exact optimal transport plan between two measures. `cost` is the
// 1-Wasserstein distance; `plan` lists the nonzero shipments (mass parked in
// place by the common-mass reduction appears as from == to entries).
// `source_potentials` carries the dual solution restricted to the reduced
// sources; dual_certificate() extends it to a 1-Lipschitz witness.
struct TransportPlan {
  double cost = 0.0;
  std::vector<TransportEntry> plan;
  std::vector<std::pair<VertexId, double>> source_potentials;
};

// Solves min sum_{u,v} d(u,v) * f(u,v) over couplings of mu and nu by
// successive shortest augmenting paths with node potentials -- exact, no
// entropic smoothing. Both totals must agree to 1e-9 (else
// UnbalancedMeasures); they are normalised to 1 before solving. Mass shared
// between mu and nu is matched in place first, which shrinks the solver input
// to the measures' difference and is exact for metric costs.
TransportPlan wasserstein1(const ProbabilityMeasure& mu,
                           const ProbabilityMeasure& nu,
                           const DistanceFn& dist);

// Kantorovich--Rubinstein witness: a function phi on the union of the two
// supports, 1-Lipschitz w.r.t. `dist`, whose pairing <phi, mu - nu> matches
// plan.cost. `gap` = cost - pairing; tiny |gap| certifies optimality.
struct DualCertificate {
  std::vector<std::pair<VertexId, double>> potential;
  double gap = 0.0;
};

DualCertificate dual_certificate(const ProbabilityMeasure& mu,
                                 const ProbabilityMeasure& nu,
                                 const DistanceFn& dist,
                                 const TransportPlan& plan);

}  // namespace hyperrcd
