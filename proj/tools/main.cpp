// hyperrcd command line: curvature, Ricci flow and community detection on
// weighted hypergraphs, plus the synthetic benchmark generator and NMI
// scoring. Every subcommand reads one of the three ingest formats (hg-text,
// hg-json, hyperedge-list) and fails with a single-line diagnostic on stderr.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperrcd/detection.hpp"
#include "hyperrcd/io.hpp"
#include "hyperrcd/pipeline.hpp"
#include "hyperrcd/synthgen.hpp"

namespace {

using namespace hyperrcd;

// Shortest decimal round-trip representation, consistent with the files the
// pipeline writes.
std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  double back = 0.0;
  std::istringstream(os.str()) >> back;
  if (back == v) {
    std::ostringstream shorter;
    for (int prec = 1; prec < 17; ++prec) {
      shorter.str("");
      shorter << std::setprecision(prec) << v;
      double b2 = 0.0;
      std::istringstream(shorter.str()) >> b2;
      if (b2 == v) return shorter.str();
    }
  }
  return os.str();
}

IngestResult ingest(const std::string& path, const std::string& format) {
  FileFormat f =
      format == "auto" ? detect_format(path) : parse_format(format);
  return load_hypergraph(path, f);
}

// Writes to `path`, or stdout when the path is empty.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot open " + path + " for write");
  out << content;
}

std::string curvature_csv(const CurvatureReport& report, const Hypergraph& g) {
  std::ostringstream os;
  os << "edge_index,size,weight,W_h,d_h,kappa\n";
  for (const EdgeCurvature& ec : report.edges) {
    os << ec.edge << ',' << g.edge(ec.edge).size() << ',' << fmt(ec.weight)
       << ',' << fmt(ec.wasserstein) << ',' << fmt(ec.length) << ','
       << fmt(ec.kappa) << '\n';
  }
  return os.str();
}

std::string flow_csv(const std::vector<FlowState>& trajectory) {
  std::ostringstream os;
  os << "k,edge_index,weight,kappa\n";
  for (const FlowState& s : trajectory) {
    for (std::size_t e = 0; e < s.weights.size(); ++e) {
      os << s.iteration << ',' << e << ',' << fmt(s.weights[e]) << ','
         << fmt(s.report.edges[e].kappa) << '\n';
    }
  }
  return os.str();
}

std::string sweep_csv(const SweepResult& sweep) {
  std::ostringstream os;
  os << "cutoff,num_communities,nmi\n";
  for (const SweepPoint& p : sweep.points) {
    os << fmt(p.cutoff) << ',' << p.num_communities << ',' << fmt(p.score)
       << '\n';
  }
  return os.str();
}

struct InputArgs {
  std::string path;
  std::string format = "auto";
};

void add_input(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("input", in.path, "hypergraph file")->required();
  cmd->add_option("--format", in.format,
                  "hg-text | hg-json | hyperedge-list | auto (by extension)")
      ->capture_default_str();
}

int cmd_validate(const InputArgs& in) {
  IngestResult r = ingest(in.path, in.format);
  const Hypergraph& g = r.graph;
  std::cout << "ok: " << g.num_vertices() << " vertices, " << g.num_edges()
            << " hyperedges, total cardinality " << g.total_cardinality()
            << ", " << g.pair_count() << " member pairs\n";
  if (r.stats.dropped_small > 0) {
    std::cout << "note: dropped " << r.stats.dropped_small << " of "
              << r.stats.raw_records
              << " records with fewer than 2 distinct vertices\n";
  }
  return 0;
}

int cmd_measure(const InputArgs& in, int vertex, double alpha) {
  IngestResult r = ingest(in.path, in.format);
  ProbabilityMeasure mu = vertex_measure(r.graph, r.graph.weights(),
                                         static_cast<VertexId>(vertex), alpha);
  nlohmann::ordered_json out;
  out["vertex"] = mu.owner;
  out["alpha"] = mu.alpha;
  nlohmann::ordered_json support = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < mu.support.size(); ++i) {
    support.push_back({{"vertex", mu.support[i]}, {"mass", mu.mass[i]}});
  }
  out["support"] = support;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_curvature(const InputArgs& in, double alpha, int threads,
                  const std::string& out_path) {
  IngestResult r = ingest(in.path, in.format);
  CurvatureReport report =
      curvature_report(r.graph, r.graph.weights(), alpha, threads);
  emit(out_path, curvature_csv(report, r.graph));
  return 0;
}

int cmd_flow(const InputArgs& in, const FlowOptions& options,
             const std::string& out_path) {
  IngestResult r = ingest(in.path, in.format);
  std::vector<FlowState> trajectory = run_flow(r.graph, options);
  emit(out_path, flow_csv(trajectory));
  return 0;
}

int cmd_detect(const InputArgs& in, const DetectOptions& options,
               const std::string& labels_path, const std::string& out_prefix) {
  IngestResult r = ingest(in.path, in.format);
  std::optional<Partition> truth;
  if (!labels_path.empty()) {
    truth = load_labels(labels_path);
    if (truth->labels.size() !=
        static_cast<std::size_t>(r.graph.num_vertices())) {
      fail(ErrorCode::LabelLengthMismatch,
           "label file has " + std::to_string(truth->labels.size()) +
               " entries for " + std::to_string(r.graph.num_vertices()) +
               " vertices");
    }
  }
  DetectResult result =
      detect_communities(r.graph, options, truth ? &*truth : nullptr);
  std::cout << "communities: " << result.partition.num_communities() << "\n"
            << "cutoff: " << fmt(result.cutoff) << "\n"
            << "iteration: " << result.iteration << "\n"
            << (options.supervised ? "nmi: " : "gap_score: ")
            << fmt(result.score) << "\n";
  if (!out_prefix.empty()) {
    save_labels(out_prefix + ".labels", result.partition);
    emit(out_prefix + ".sweep.csv", sweep_csv(result.sweep));
    std::cout << "wrote " << out_prefix << ".labels and " << out_prefix
              << ".sweep.csv\n";
  }
  return 0;
}

int cmd_eval(const std::string& truth_path, const std::string& pred_path) {
  Partition truth = load_labels(truth_path);
  Partition pred = load_labels(pred_path);
  std::cout << std::fixed << std::setprecision(6) << nmi(truth, pred) << "\n";
  return 0;
}

int cmd_generate(GenParams params, const std::string& series_id, int index,
                 const std::string& out_prefix) {
  if (!series_id.empty()) {
    std::vector<GenParams> sweep = series(series_id);
    if (index < 0 || index >= static_cast<int>(sweep.size())) {
      fail(ErrorCode::InfeasibleParams,
           "series " + series_id + " has " + std::to_string(sweep.size()) +
               " configurations; --index " + std::to_string(index) +
               " is out of range");
    }
    std::uint64_t seed = params.seed;
    params = sweep[index];
    params.seed = seed;  // seed stays caller-controlled
  }
  GeneratedInstance inst = generate(params);
  save_hg_text(out_prefix + ".hg", inst.graph);
  save_labels(out_prefix + ".labels", inst.truth);
  std::cout << "wrote " << out_prefix << ".hg and " << out_prefix
            << ".labels: " << inst.graph.num_vertices() << " vertices, "
            << inst.graph.num_edges() << " hyperedges (" << inst.intra_edges
            << " intra, " << inst.inter_edges << " inter, "
            << inst.bridge_edges << " bridge)\n";
  return 0;
}

int cmd_expand(const InputArgs& in, const std::string& as,
               const std::string& out_path) {
  IngestResult r = ingest(in.path, in.format);
  WeightedGraph wg = clique_expansion(r.graph);
  std::ostringstream os;
  if (as == "dot") {
    write_expansion_dot(os, wg);
  } else if (as == "csv") {
    write_expansion_csv(os, wg);
  } else {
    fail(ErrorCode::ParseError, "--as must be dot or csv, got " + as);
  }
  emit(out_path, os.str());
  return 0;
}

int cmd_run(const RunConfig& config) {
  RunReport report = run_pipeline(config);
  const SeedOutcome& best = report.outcomes[report.best_outcome];
  std::cout << "run dir: " << report.run_dir << "\n"
            << "instances: " << report.outcomes.size() << "\n"
            << "mean score: " << fmt(report.mean_score) << "\n"
            << "best: seed " << best.seed << ", score " << fmt(best.score)
            << ", cutoff " << fmt(best.cutoff) << ", "
            << best.num_communities << " communities (iteration "
            << best.iteration << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Ollivier-Ricci curvature, Ricci flow and community detection on "
      "weighted hypergraphs"};
  app.require_subcommand(1);

  // validate
  InputArgs val_in;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "parse a hypergraph and check invariants");
  add_input(validate_cmd, val_in);

  // measure
  InputArgs mea_in;
  int mea_vertex = 0;
  double mea_alpha = 0.5;
  CLI::App* measure_cmd = app.add_subcommand(
      "measure", "print one vertex's random-walk measure as JSON");
  add_input(measure_cmd, mea_in);
  measure_cmd->add_option("--vertex", mea_vertex, "vertex id")->required();
  measure_cmd->add_option("--alpha", mea_alpha, "laziness in [0, 1]")
      ->capture_default_str();

  // curvature
  InputArgs cur_in;
  double cur_alpha = 0.5;
  int cur_threads = 1;
  std::string cur_out;
  CLI::App* curvature_cmd = app.add_subcommand(
      "curvature", "per-hyperedge curvature as CSV (stdout or --out)");
  add_input(curvature_cmd, cur_in);
  curvature_cmd->add_option("--alpha", cur_alpha, "laziness in [0, 1]")
      ->capture_default_str();
  curvature_cmd->add_option("--threads", cur_threads, "worker threads")
      ->capture_default_str();
  curvature_cmd->add_option("--out", cur_out, "output file (default stdout)");

  // flow
  InputArgs flo_in;
  FlowOptions flo_options;
  double flo_floor = -1.0;  // negative = keep the default floor
  std::string flo_out;
  CLI::App* flow_cmd = app.add_subcommand(
      "flow", "run the Ricci flow; per-iteration weights and curvatures as "
              "CSV (stdout or --out)");
  add_input(flow_cmd, flo_in);
  flow_cmd->add_option("--alpha", flo_options.alpha, "laziness in [0, 1]")
      ->capture_default_str();
  flow_cmd->add_option("--eta", flo_options.eta, "step size")
      ->capture_default_str();
  flow_cmd->add_option("--iterations", flo_options.iterations, "flow steps")
      ->capture_default_str();
  flow_cmd->add_option("--floor", flo_floor,
                       "weight floor (default: 1e-6 * min initial weight)");
  flow_cmd->add_flag("--pair-normalized", flo_options.pair_normalized,
                     "divide each step by the hyperedge's member-pair count "
                     "(use on inputs mixing small and large hyperedges)");
  flow_cmd->add_option("--threads", flo_options.threads, "worker threads")
      ->capture_default_str();
  flow_cmd->add_option("--out", flo_out, "output file (default stdout)");

  // detect
  InputArgs det_in;
  DetectOptions det_options;
  double det_floor = -1.0;
  std::string det_labels;
  std::string det_mode = "supervised";
  std::string det_out;
  CLI::App* detect_cmd = app.add_subcommand(
      "detect", "flow + cutoff sweep + connected components");
  add_input(detect_cmd, det_in);
  detect_cmd->add_option("--labels", det_labels,
                         "ground-truth labels (required when supervised)");
  detect_cmd
      ->add_option("--mode", det_mode, "supervised | unsupervised")
      ->capture_default_str()
      ->check(CLI::IsMember({"supervised", "unsupervised"}));
  detect_cmd
      ->add_option("--alpha", det_options.flow.alpha, "laziness in [0, 1]")
      ->capture_default_str();
  detect_cmd->add_option("--eta", det_options.flow.eta, "step size")
      ->capture_default_str();
  detect_cmd
      ->add_option("--iterations", det_options.flow.iterations, "flow steps")
      ->capture_default_str();
  detect_cmd->add_option("--floor", det_floor,
                         "weight floor (default: 1e-6 * min initial weight)");
  detect_cmd->add_flag("--pair-normalized", det_options.flow.pair_normalized,
                       "divide each flow step by the hyperedge's member-pair "
                       "count (use on inputs mixing small and large "
                       "hyperedges)");
  detect_cmd->add_option("--threads", det_options.flow.threads,
                         "worker threads")
      ->capture_default_str();
  detect_cmd->add_flag("--sweep-every-iteration",
                       det_options.sweep_every_iteration,
                       "sweep every flow iterate, keep the best");
  detect_cmd->add_option(
      "--out", det_out, "prefix for PREFIX.labels and PREFIX.sweep.csv");

  // eval
  std::string eval_truth;
  std::string eval_pred;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "NMI between two label files");
  eval_cmd->add_option("--truth", eval_truth, "ground-truth labels")
      ->required();
  eval_cmd->add_option("--pred", eval_pred, "predicted labels")->required();

  // generate
  GenParams gen_params;
  std::string gen_series;
  int gen_index = 0;
  std::string gen_out;
  CLI::App* generate_cmd = app.add_subcommand(
      "generate", "sample a block-model benchmark hypergraph");
  generate_cmd->add_option("--out", gen_out,
                           "prefix for PREFIX.hg and PREFIX.labels")
      ->required();
  generate_cmd
      ->add_option("--series", gen_series,
                   "built-in sweep: D1 (degree), D2 (mixing), D3 (size)")
      ->check(CLI::IsMember({"D1", "D2", "D3"}));
  generate_cmd
      ->add_option("--index", gen_index, "configuration index in the series")
      ->capture_default_str();
  generate_cmd->add_option("--n", gen_params.n, "vertices")
      ->capture_default_str();
  generate_cmd->add_option("--q", gen_params.q, "communities")
      ->capture_default_str();
  generate_cmd
      ->add_option("--avg-degree", gen_params.avg_degree,
                   "target average vertex degree")
      ->capture_default_str();
  generate_cmd->add_option(
      "--total-cardinality", gen_params.total_cardinality,
      "target sum of hyperedge sizes (overrides --avg-degree)");
  generate_cmd
      ->add_option("--p-intra", gen_params.p_intra,
                   "probability a hyperedge stays within one community")
      ->capture_default_str();
  generate_cmd
      ->add_option("--degree-exponent", gen_params.degree_exponent,
                   "0 = uniform vertex propensities")
      ->capture_default_str();
  generate_cmd->add_option("--min-size", gen_params.min_size,
                           "smallest hyperedge")
      ->capture_default_str();
  generate_cmd->add_option("--max-size", gen_params.max_size,
                           "largest hyperedge")
      ->capture_default_str();
  generate_cmd->add_option("--seed", gen_params.seed, "RNG seed")
      ->capture_default_str();

  // expand
  InputArgs exp_in;
  std::string exp_as = "csv";
  std::string exp_out;
  CLI::App* expand_cmd = app.add_subcommand(
      "expand", "clique expansion of the hypergraph (dot or csv)");
  add_input(expand_cmd, exp_in);
  expand_cmd->add_option("--as", exp_as, "dot | csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"dot", "csv"}));
  expand_cmd->add_option("--out", exp_out, "output file (default stdout)");

  // run
  RunConfig run_config;
  bool run_generate = false;
  std::string run_mode = "supervised";
  CLI::App* run_cmd = app.add_subcommand(
      "run", "full pipeline: ingest/generate, flow, sweep, artifacts");
  run_cmd->add_option("--input", run_config.input_path, "hypergraph file");
  run_cmd->add_option("--format", run_config.format,
                      "hg-text | hg-json | hyperedge-list | auto")
      ->capture_default_str();
  run_cmd->add_option("--labels", run_config.labels_path,
                      "ground-truth labels for file inputs");
  run_cmd->add_flag("--generate", run_generate,
                    "use the synthetic generator instead of --input");
  run_cmd->add_option("--n", run_config.gen.n, "generator: vertices")
      ->capture_default_str();
  run_cmd->add_option("--q", run_config.gen.q, "generator: communities")
      ->capture_default_str();
  run_cmd
      ->add_option("--avg-degree", run_config.gen.avg_degree,
                   "generator: target average degree")
      ->capture_default_str();
  run_cmd->add_option("--total-cardinality", run_config.gen.total_cardinality,
                      "generator: target sum of hyperedge sizes");
  run_cmd
      ->add_option("--p-intra", run_config.gen.p_intra,
                   "generator: intra-community probability")
      ->capture_default_str();
  run_cmd
      ->add_option("--degree-exponent", run_config.gen.degree_exponent,
                   "generator: 0 = uniform propensities")
      ->capture_default_str();
  run_cmd->add_option("--min-size", run_config.gen.min_size,
                      "generator: smallest hyperedge")
      ->capture_default_str();
  run_cmd->add_option("--max-size", run_config.gen.max_size,
                      "generator: largest hyperedge")
      ->capture_default_str();
  run_cmd->add_option("--alpha", run_config.alpha, "laziness in [0, 1]")
      ->capture_default_str();
  run_cmd->add_option("--eta", run_config.eta, "flow step size")
      ->capture_default_str();
  run_cmd->add_option("--iterations", run_config.iterations, "flow steps")
      ->capture_default_str();
  run_cmd->add_flag("--pair-normalized", run_config.pair_normalized,
                    "divide each flow step by the hyperedge's member-pair "
                    "count (use on inputs mixing small and large hyperedges)");
  run_cmd->add_option("--seed", run_config.seed, "base RNG seed")
      ->capture_default_str();
  run_cmd
      ->add_option("--repeats", run_config.repeats,
                   "generator instances (seeds seed, seed+1, ...)")
      ->capture_default_str();
  run_cmd->add_option("--mode", run_mode, "supervised | unsupervised")
      ->capture_default_str()
      ->check(CLI::IsMember({"supervised", "unsupervised"}));
  run_cmd->add_flag("--sweep-every-iteration",
                    run_config.sweep_every_iteration,
                    "sweep every flow iterate, keep the best");
  run_cmd->add_option("--threads", run_config.threads, "worker threads")
      ->capture_default_str();
  run_cmd
      ->add_option("--max-pairs", run_config.max_pairs,
                   "refuse instances with more member pairs than this")
      ->capture_default_str();
  run_cmd->add_option("--out-dir", run_config.out_dir, "artifact root")
      ->capture_default_str();
  run_cmd->add_option("--run-id", run_config.run_id,
                      "artifact subdirectory (default: config hash)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return cmd_validate(val_in);
    if (measure_cmd->parsed()) return cmd_measure(mea_in, mea_vertex, mea_alpha);
    if (curvature_cmd->parsed())
      return cmd_curvature(cur_in, cur_alpha, cur_threads, cur_out);
    if (flow_cmd->parsed()) {
      if (flo_floor >= 0.0) flo_options.floor = flo_floor;
      return cmd_flow(flo_in, flo_options, flo_out);
    }
    if (detect_cmd->parsed()) {
      if (det_floor >= 0.0) det_options.flow.floor = det_floor;
      det_options.supervised = det_mode == "supervised";
      return cmd_detect(det_in, det_options, det_labels, det_out);
    }
    if (eval_cmd->parsed()) return cmd_eval(eval_truth, eval_pred);
    if (generate_cmd->parsed())
      return cmd_generate(gen_params, gen_series, gen_index, gen_out);
    if (expand_cmd->parsed()) return cmd_expand(exp_in, exp_as, exp_out);
    if (run_cmd->parsed()) {
      run_config.use_generator = run_generate;
      run_config.supervised = run_mode == "supervised";
      if (!run_generate && run_config.input_path.empty()) {
        fail(ErrorCode::InfeasibleParams,
             "run needs --input FILE or --generate");
      }
      return cmd_run(run_config);
    }
  } catch (const hyperrcd::Error& e) {
    std::cerr << "error: " << e.formatted() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
