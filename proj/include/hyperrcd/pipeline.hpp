#pragma once

#include <cstdint>
#include <string>

#include "hyperrcd/detection.hpp"
#include "hyperrcd/io.hpp"
#include "hyperrcd/synthgen.hpp"

namespace hyperrcd {

// Everything one `run` invocation needs. Input is either a file
// (input_path nonempty) or the synthetic generator (use_generator).
struct RunConfig {
  std::string input_path;
  std::string format = "auto";  // auto = infer from extension
  std::string labels_path;      // ground truth for supervised file runs

  bool use_generator = false;
  GenParams gen;

  double alpha = 0.5;
  double eta = 0.1;
  int iterations = 20;
  bool pair_normalized = false;  // see FlowOptions::pair_normalized
  std::uint64_t seed = 1;
  int repeats = 5;
  bool supervised = true;
  bool sweep_every_iteration = false;
  int threads = 1;
  // Refuse instances whose pairwise-transport count (sum of s*(s-1)/2 over
  // hyperedges) exceeds this; curvature cost grows roughly as that count
  // times the cube of the measure support size.
  std::size_t max_pairs = 2000000;

  std::string out_dir = "out";
  std::string run_id;  // derived from the config when empty
};

struct SeedOutcome {
  std::uint64_t seed = 0;
  double score = 0.0;
  double cutoff = 0.0;
  int iteration = 0;
  int num_communities = 0;
};

struct RunReport {
  std::string run_dir;  // out_dir/run_id
  std::vector<SeedOutcome> outcomes;
  double mean_score = 0.0;
  std::size_t best_outcome = 0;
};

// Ingest (or generate) -> flow -> sweep -> artifacts. Writes, under
// out_dir/run_id: config.json, flow.csv, sweep.csv, partition.labels and
// report.json (all byte-deterministic for a fixed config), plus timings.json
// (wall-clock per phase, excluded from the determinism contract). With the
// generator, `repeats` instances run on seeds seed, seed+1, ...; artifacts
// come from the best-scoring one. File inputs are deterministic, so they run
// once regardless of `repeats`.
RunReport run_pipeline(const RunConfig& config);

// The derived run id (exposed for tests).
std::string derive_run_id(const RunConfig& config);

}  // namespace hyperrcd
