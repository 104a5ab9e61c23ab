#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hyperrcd/pipeline.hpp"

using namespace hyperrcd;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunConfig small_generated_config(const std::string& out_dir) {
  RunConfig cfg;
  cfg.use_generator = true;
  cfg.gen.n = 30;
  cfg.gen.q = 2;
  cfg.gen.avg_degree = 6;
  cfg.gen.p_intra = 0.9;
  cfg.gen.seed = 7;
  cfg.seed = 7;
  cfg.repeats = 2;
  cfg.iterations = 2;
  cfg.out_dir = out_dir;
  return cfg;
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("pipeline writes the full artifact set") {
  fs::path dir = fresh_dir("hyperrcd_pipe_artifacts");
  RunConfig cfg = small_generated_config(dir.string());
  RunReport report = run_pipeline(cfg);

  CHECK(report.outcomes.size() == 2);
  CHECK(report.best_outcome < report.outcomes.size());
  CHECK(report.mean_score >= 0.0);
  CHECK(report.mean_score <= 1.0);

  fs::path run_dir(report.run_dir);
  for (const char* name : {"config.json", "flow.csv", "sweep.csv",
                           "partition.labels", "report.json", "timings.json"}) {
    CHECK_MESSAGE(fs::exists(run_dir / name), name);
  }

  // flow.csv holds iterations+1 states for every hyperedge.
  std::string flow = slurp(run_dir / "flow.csv");
  CHECK(flow.rfind("k,edge_index,weight,kappa\n", 0) == 0);
  std::string sweep = slurp(run_dir / "sweep.csv");
  CHECK(sweep.rfind("cutoff,num_communities,nmi\n", 0) == 0);

  Partition part = load_labels((run_dir / "partition.labels").string());
  CHECK(static_cast<int>(part.labels.size()) == cfg.gen.n);

  fs::remove_all(dir);
}

TEST_CASE("report.json is byte-identical across reruns") {
  fs::path dir_a = fresh_dir("hyperrcd_pipe_rerun_a");
  fs::path dir_b = fresh_dir("hyperrcd_pipe_rerun_b");
  RunConfig cfg_a = small_generated_config(dir_a.string());
  RunConfig cfg_b = small_generated_config(dir_b.string());
  cfg_b.run_id = derive_run_id(cfg_a);  // same id under a different root

  RunReport ra = run_pipeline(cfg_a);
  RunReport rb = run_pipeline(cfg_b);

  CHECK(slurp(fs::path(ra.run_dir) / "report.json") ==
        slurp(fs::path(rb.run_dir) / "report.json"));
  CHECK(slurp(fs::path(ra.run_dir) / "flow.csv") ==
        slurp(fs::path(rb.run_dir) / "flow.csv"));
  CHECK(slurp(fs::path(ra.run_dir) / "sweep.csv") ==
        slurp(fs::path(rb.run_dir) / "sweep.csv"));
  CHECK(slurp(fs::path(ra.run_dir) / "partition.labels") ==
        slurp(fs::path(rb.run_dir) / "partition.labels"));

  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
}

TEST_CASE("derived run id depends on the config, not the clock") {
  RunConfig a = small_generated_config("x");
  RunConfig b = small_generated_config("x");
  CHECK(derive_run_id(a) == derive_run_id(b));
  b.alpha = 0.75;
  CHECK(derive_run_id(a) != derive_run_id(b));
  b = small_generated_config("x");
  b.pair_normalized = true;
  CHECK(derive_run_id(a) != derive_run_id(b));
}

TEST_CASE("pair budget refuses oversized instances") {
  fs::path dir = fresh_dir("hyperrcd_pipe_budget");
  RunConfig cfg = small_generated_config(dir.string());
  cfg.max_pairs = 3;
  try {
    run_pipeline(cfg);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
    CHECK(std::string(e.what()).find("--max-pairs") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("file input: supervised mode needs labels, repeats collapse") {
  fs::path dir = fresh_dir("hyperrcd_pipe_file");
  fs::create_directories(dir);
  fs::path hg = dir / "two_blocks.hg";
  {
    // Two pair-cliques joined by one bridge; truth = block membership.
    std::ofstream out(hg);
    out << "6 7\n";
    out << "1 0 1\n1 0 2\n1 1 2\n";
    out << "1 3 4\n1 3 5\n1 4 5\n";
    out << "1 2 3\n";
  }
  fs::path labels = dir / "two_blocks.labels";
  {
    std::ofstream out(labels);
    out << "0\n0\n0\n1\n1\n1\n";
  }

  RunConfig cfg;
  cfg.input_path = hg.string();
  cfg.labels_path = labels.string();
  cfg.iterations = 3;
  cfg.repeats = 5;  // ignored for deterministic file inputs
  cfg.out_dir = (dir / "out").string();
  RunReport report = run_pipeline(cfg);
  CHECK(report.outcomes.size() == 1);
  CHECK(report.outcomes[0].score == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.outcomes[0].num_communities == 2);

  RunConfig no_labels = cfg;
  no_labels.labels_path.clear();
  no_labels.out_dir = (dir / "out2").string();
  try {
    run_pipeline(no_labels);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfeasibleParams);
  }

  // Unsupervised mode runs without labels.
  no_labels.supervised = false;
  RunReport unsup = run_pipeline(no_labels);
  CHECK(unsup.outcomes.size() == 1);
  CHECK(unsup.outcomes[0].num_communities >= 1);

  fs::remove_all(dir);
}

TEST_CASE("config echo lands in config.json") {
  fs::path dir = fresh_dir("hyperrcd_pipe_echo");
  RunConfig cfg = small_generated_config(dir.string());
  cfg.alpha = 0.625;
  RunReport report = run_pipeline(cfg);
  std::string text = slurp(fs::path(report.run_dir) / "config.json");
  CHECK(text.find("0.625") != std::string::npos);
  CHECK(text.find("\"iterations\"") != std::string::npos);
  fs::remove_all(dir);
}
