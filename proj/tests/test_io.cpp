#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hyperrcd/io.hpp"

using namespace hyperrcd;

namespace {

// Writes content to a temp file and returns its path.
struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content) {
    path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("hg-text: valid three-vertex chain") {
  TempFile f("chain.hg", "3 2\n1 0 1\n1 1 2\n");
  IngestResult r = load_hypergraph(f.path, FileFormat::HgText);
  CHECK(r.graph.num_vertices() == 3);
  CHECK(r.graph.num_edges() == 2);
  CHECK(r.stats.raw_records == 2);
  CHECK(r.stats.kept_records == 2);
}

TEST_CASE("hg-text: out-of-range vertex id is a parse error") {
  TempFile f("bad_id.hg", "2 2\n1 0 1\n1 1 2\n");
  CHECK_THROWS_AS(load_hypergraph(f.path, FileFormat::HgText), Error);
  try {
    load_hypergraph(f.path, FileFormat::HgText);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
}

TEST_CASE("hg-text: count mismatches and junk are parse errors") {
  TempFile missing("missing.hg", "3 2\n1 0 1\n");
  CHECK_THROWS_AS(load_hypergraph(missing.path, FileFormat::HgText), Error);
  TempFile extra("extra.hg", "3 1\n1 0 1\n1 1 2\n");
  CHECK_THROWS_AS(load_hypergraph(extra.path, FileFormat::HgText), Error);
  TempFile junk("junk.hg", "3 1\n1 0 x\n");
  CHECK_THROWS_AS(load_hypergraph(junk.path, FileFormat::HgText), Error);
  TempFile nohdr("nohdr.hg", "\n");
  CHECK_THROWS_AS(load_hypergraph(nohdr.path, FileFormat::HgText), Error);
}

TEST_CASE("hg-text: validation failures are forwarded") {
  TempFile disc("disc.hg", "4 2\n1 0 1\n1 2 3\n");
  try {
    load_hypergraph(disc.path, FileFormat::HgText);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
  TempFile zero("zerow.hg", "2 1\n0 0 1\n");
  try {
    load_hypergraph(zero.path, FileFormat::HgText);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveWeight);
  }
}

TEST_CASE("hg-text round trip preserves everything") {
  Hypergraph g(4, {Hyperedge({0, 1, 2}), Hyperedge({2, 3})},
               {0.123456789012345, 2.0});
  auto path =
      (std::filesystem::temp_directory_path() / "roundtrip.hg").string();
  save_hg_text(path, g);
  IngestResult r = load_hypergraph(path, FileFormat::HgText);
  CHECK(r.graph.num_vertices() == 4);
  REQUIRE(r.graph.num_edges() == 2);
  CHECK(r.graph.weight(0) == 0.123456789012345);
  CHECK(r.graph.edge(0).members == std::vector<VertexId>{0, 1, 2});
  std::remove(path.c_str());
}

TEST_CASE("hg-json round trip preserves everything") {
  Hypergraph g(3, {Hyperedge({0, 1}), Hyperedge({1, 2})}, {0.25, 1.75});
  auto path =
      (std::filesystem::temp_directory_path() / "roundtrip.json").string();
  save_hg_json(path, g);
  IngestResult r = load_hypergraph(path, FileFormat::HgJson);
  CHECK(r.graph.num_vertices() == 3);
  REQUIRE(r.graph.num_edges() == 2);
  CHECK(r.graph.weight(1) == 1.75);
  std::remove(path.c_str());
}

TEST_CASE("hg-json: malformed documents are parse errors") {
  TempFile bad("bad.json", "{\"n\": 3, \"hyperedges\": [{\"w\": 1}]}");
  CHECK_THROWS_AS(load_hypergraph(bad.path, FileFormat::HgJson), Error);
  TempFile syntax("syntax.json", "{not json");
  CHECK_THROWS_AS(load_hypergraph(syntax.path, FileFormat::HgJson), Error);
}

TEST_CASE("hyperedge-list: singletons are counted and dropped") {
  TempFile f("groups.hyperedges",
             "# attribute groups\n0 1 2\n3\n1 3\n0 2 3\n\n");
  IngestResult r = load_hypergraph(f.path, FileFormat::EdgeList);
  CHECK(r.graph.num_vertices() == 4);
  CHECK(r.graph.num_edges() == 3);
  CHECK(r.stats.raw_records == 4);
  CHECK(r.stats.dropped_small == 1);
  CHECK(r.stats.kept_records == 3);
  CHECK(r.stats.raw_cardinality == 9);
  for (int e = 0; e < r.graph.num_edges(); ++e) {
    CHECK(r.graph.weight(e) == 1.0);
  }
}

TEST_CASE("hyperedge-list: negative ids and empty files are errors") {
  TempFile neg("neg.hyperedges", "0 -1\n");
  CHECK_THROWS_AS(load_hypergraph(neg.path, FileFormat::EdgeList), Error);
  TempFile empty("empty.hyperedges", "# nothing\n");
  CHECK_THROWS_AS(load_hypergraph(empty.path, FileFormat::EdgeList), Error);
}

TEST_CASE("format names and extension detection") {
  CHECK(parse_format("hg-text") == FileFormat::HgText);
  CHECK(parse_format("hg-json") == FileFormat::HgJson);
  CHECK(parse_format("hyperedge-list") == FileFormat::EdgeList);
  CHECK_THROWS_AS(parse_format("csv"), Error);
  CHECK(detect_format("a/b/x.hg") == FileFormat::HgText);
  CHECK(detect_format("x.json") == FileFormat::HgJson);
  CHECK(detect_format("zoo.hyperedges") == FileFormat::EdgeList);
  CHECK_THROWS_AS(detect_format("mystery.dat"), Error);
}

TEST_CASE("labels round trip and parse errors") {
  auto path = (std::filesystem::temp_directory_path() / "p.labels").string();
  Partition p({2, 0, 0, 1});
  save_labels(path, p);
  Partition loaded = load_labels(path);
  CHECK(loaded.labels == p.labels);
  std::remove(path.c_str());

  TempFile junk("junk.labels", "1\ntwo\n");
  CHECK_THROWS_AS(load_labels(junk.path), Error);
  TempFile empty("empty.labels", "\n");
  CHECK_THROWS_AS(load_labels(empty.path), Error);
}

TEST_CASE("missing files report a parse error naming the path") {
  try {
    load_hypergraph("/nonexistent/nope.hg", FileFormat::HgText);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("nope.hg") != std::string::npos);
  }
}

TEST_CASE("expansion writers emit the expected shapes") {
  Hypergraph g(3, {Hyperedge({0, 1, 2})}, {2.0});
  WeightedGraph wg = clique_expansion(g);
  std::ostringstream dot;
  write_expansion_dot(dot, wg);
  CHECK(dot.str().find("graph clique_expansion {") == 0);
  CHECK(dot.str().find("0 -- 1 [weight=2]") != std::string::npos);
  std::ostringstream csv;
  write_expansion_csv(csv, wg);
  CHECK(csv.str().find("u,v,weight\n0,1,2\n") == 0);
}
