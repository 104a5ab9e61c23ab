#include <random>

#include "doctest.h"
#include "hyperrcd/detection.hpp"
#include "hyperrcd/synthgen.hpp"
#include "oracles.hpp"

using namespace hyperrcd;

namespace {

// Two dense blocks {0..4} and {5..9} joined by one bridge hyperedge. The
// bridge has nothing holding it together, so flow stretches it while the
// block edges stay comparatively tight.
Hypergraph two_blocks() {
  std::vector<Hyperedge> edges;
  for (int base : {0, 5}) {
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        edges.push_back(Hyperedge({base + i, base + j}));
      }
    }
    edges.push_back(
        Hyperedge({base, base + 1, base + 2, base + 3, base + 4}));
  }
  edges.push_back(Hyperedge({4, 5}));
  return Hypergraph(10, std::move(edges));
}

}  // namespace

TEST_CASE("cut_above keeps exactly the light hyperedges") {
  Hypergraph g(4, {Hyperedge({0, 1}), Hyperedge({1, 2}), Hyperedge({2, 3})},
               {0.2, 0.9, 0.3});
  Hypergraph cut = cut_above(g, g.weights(), 0.5);
  REQUIRE(cut.num_edges() == 2);
  CHECK(cut.edge(0).members == std::vector<VertexId>{0, 1});
  CHECK(cut.edge(1).members == std::vector<VertexId>{2, 3});

  CHECK(cut_above(g, g.weights(), 0.9).num_edges() == 3);   // nothing removed
  CHECK(cut_above(g, g.weights(), 0.19).num_edges() == 0);  // everything
}

TEST_CASE("components labels components by smallest vertex") {
  Hypergraph none(3, {}, {});
  CHECK(components(none).labels == std::vector<int>{0, 1, 2});

  Hypergraph one(3, {Hyperedge({0, 1, 2})}, {1.0});
  CHECK(components(one).labels == std::vector<int>{0, 0, 0});

  Hypergraph two(4, {Hyperedge({0, 1}), Hyperedge({2, 3})}, {1.0, 1.0});
  CHECK(components(two).labels == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("supervised sweep visits every distinct weight once") {
  Hypergraph g(4, {Hyperedge({0, 1}), Hyperedge({1, 2}), Hyperedge({2, 3})},
               {0.2, 0.9, 0.2});
  Partition truth({0, 0, 1, 1});
  SweepResult sweep = sweep_supervised(g, g.weights(), truth);
  REQUIRE(sweep.points.size() == 2);  // distinct weights 0.9, 0.2
  CHECK(sweep.points[0].cutoff == 0.9);
  CHECK(sweep.points[1].cutoff == 0.2);
  // Cutting the 0.9 edge separates {0,1} from {2,3}: perfect agreement.
  CHECK(sweep.best_cutoff() == 0.2);
  CHECK(sweep.best_score() == 1.0);
  CHECK(sweep.best_partition.labels == truth.labels);
}

TEST_CASE("sweep point count equals distinct weight count") {
  Hypergraph g(4, {Hyperedge({0, 1}), Hyperedge({1, 2}), Hyperedge({2, 3})},
               {0.5, 0.5, 0.5});
  Partition truth({0, 0, 1, 1});
  SweepResult sweep = sweep_supervised(g, g.weights(), truth);
  CHECK(sweep.points.size() == 1);
}

TEST_CASE("community count is monotone as the cutoff drops") {
  std::mt19937_64 rng(127);
  Hypergraph g = oracles::random_connected_hypergraph(rng, 14, 20);
  Partition truth(std::vector<int>(g.num_vertices(), 0));
  SweepResult sweep = sweep_supervised(g, g.weights(), truth);
  for (std::size_t i = 0; i + 1 < sweep.points.size(); ++i) {
    CHECK(sweep.points[i].cutoff > sweep.points[i + 1].cutoff);
    CHECK(sweep.points[i].num_communities <=
          sweep.points[i + 1].num_communities);
  }
  // The no-removal candidate reproduces the connected input.
  CHECK(sweep.points[0].num_communities == 1);
}

TEST_CASE("ties break toward the larger cutoff") {
  // Both cutoffs give the same (degenerate) score against a single-community
  // truth; the larger must win.
  Hypergraph g(3, {Hyperedge({0, 1}), Hyperedge({1, 2})}, {0.4, 0.8});
  Partition truth({0, 0, 0});
  SweepResult sweep = sweep_supervised(g, g.weights(), truth);
  REQUIRE(sweep.points.size() == 2);
  CHECK(sweep.points[0].score >= sweep.points[1].score);
  CHECK(sweep.best_cutoff() == 0.8);
}

TEST_CASE("unsupervised sweep cuts at the dominant relative gap") {
  Hypergraph g(4, {Hyperedge({0, 1}), Hyperedge({1, 2}), Hyperedge({2, 3})},
               {1.0, 1.01, 5.0});
  SweepResult sweep = sweep_unsupervised(g, g.weights());
  REQUIRE(sweep.points.size() == 3);
  CHECK(sweep.best_cutoff() == 1.01);
  // Cutting the weight-5 edge separates {2,3}... the 1.01 edge survives.
  CHECK(sweep.points[1].num_communities == 2);
}

TEST_CASE("unsupervised sweep with equal weights makes no cut") {
  Hypergraph g(3, {Hyperedge({0, 1}), Hyperedge({1, 2})}, {2.0, 2.0});
  SweepResult sweep = sweep_unsupervised(g, g.weights());
  REQUIRE(sweep.points.size() == 1);
  CHECK(sweep.best_cutoff() == 2.0);
  CHECK(sweep.best_partition.labels == std::vector<int>{0, 0, 0});
}

TEST_CASE("HyperRCD separates two planted blocks") {
  Hypergraph g = two_blocks();
  Partition truth({0, 0, 0, 0, 0, 1, 1, 1, 1, 1});
  DetectOptions opt;
  opt.flow.iterations = 10;
  DetectResult result = detect_communities(g, opt, &truth);
  CHECK(result.score == 1.0);
  CHECK(result.partition.labels == truth.labels);

  // Unsupervised mode lands on the same split here.
  DetectOptions unsup = opt;
  unsup.supervised = false;
  DetectResult u = detect_communities(g, unsup);
  CHECK(nmi(u.partition, truth) == 1.0);
}

TEST_CASE("sweep-every-iteration can only improve the supervised score") {
  Hypergraph g = two_blocks();
  Partition truth({0, 0, 0, 0, 0, 1, 1, 1, 1, 1});
  DetectOptions last_only;
  last_only.flow.iterations = 6;
  DetectOptions every = last_only;
  every.sweep_every_iteration = true;
  DetectResult a = detect_communities(g, last_only, &truth);
  DetectResult b = detect_communities(g, every, &truth);
  CHECK(b.score >= a.score);
  CHECK(b.trajectory.size() == a.trajectory.size());
}

TEST_CASE("supervised detection without truth labels is an error") {
  Hypergraph g = two_blocks();
  DetectOptions opt;
  CHECK_THROWS_AS(detect_communities(g, opt, nullptr), Error);
}
