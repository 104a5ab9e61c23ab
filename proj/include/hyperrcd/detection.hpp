#pragma once

#include "hyperrcd/flow.hpp"
#include "hyperrcd/metrics.hpp"

namespace hyperrcd {

// Sub-hypergraph after surgery at `cutoff`: hyperedges with weight strictly
// above the cutoff are removed, the rest keep their weights. The result may
// be disconnected -- that is the point.
Hypergraph cut_above(const Hypergraph& g, std::span<const double> weights,
                     double cutoff);

// Connected components of g (isolated vertices become singletons), labels
// assigned in order of each component's smallest vertex id.
Partition components(const Hypergraph& g);

struct SweepPoint {
  double cutoff = 0.0;
  int num_communities = 0;
  double score = 0.0;
};

struct SweepResult {
  std::vector<SweepPoint> points;  // cutoffs strictly decreasing
  std::size_t best_index = 0;
  Partition best_partition;

  double best_cutoff() const { return points[best_index].cutoff; }
  double best_score() const { return points[best_index].score; }
};

// Cutoff candidates are the distinct weights in descending order, so the
// first candidate removes nothing. Supervised score = NMI against `truth`;
// argmax wins, ties break toward the larger cutoff (fewer removals).
SweepResult sweep_supervised(const Hypergraph& g,
                             std::span<const double> weights,
                             const Partition& truth);

// Without ground truth the sweep scores each cutoff by the relative weight
// gap separating it from the next larger distinct weight: cutting inside the
// largest relative gap splits the weight distribution where flow pushed it
// apart. The no-removal candidate scores 0.
SweepResult sweep_unsupervised(const Hypergraph& g,
                               std::span<const double> weights);

struct DetectOptions {
  FlowOptions flow;
  bool supervised = true;
  // Algorithm-literal mode: sweep after every flow iteration and keep the
  // best over all of them, instead of sweeping the final weights only.
  bool sweep_every_iteration = false;
};

struct DetectResult {
  Partition partition;
  double score = 0.0;
  double cutoff = 0.0;
  int iteration = 0;  // flow iterate the winning sweep ran on
  SweepResult sweep;  // the winning iterate's full sweep curve
  std::vector<FlowState> trajectory;
};

// HyperRCD end to end: Ricci flow, then cutoff sweep(s), then components.
// `truth` is required in supervised mode.
DetectResult detect_communities(const Hypergraph& g,
                                const DetectOptions& options,
                                const Partition* truth = nullptr);

}  // namespace hyperrcd
