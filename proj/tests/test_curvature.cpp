#include <random>

#include "doctest.h"
#include "hyperrcd/curvature.hpp"
#include "oracles.hpp"

using namespace hyperrcd;

TEST_CASE("single triangle at alpha = 0.5 has curvature 3/4") {
  // Each pairwise W1 is 0.25 (see transport tests), W_h = 0.75, d_h = 3.
  Hypergraph g(3, {Hyperedge({0, 1, 2})}, {1.0});
  EdgeCurvature ec = hyperedge_curvature(g, g.weights(), 0.5, 0);
  CHECK(ec.wasserstein == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(ec.length == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(ec.kappa == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("alpha = 1 forces zero curvature everywhere") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    Hypergraph g = oracles::random_connected_hypergraph(rng, 14, 24);
    CurvatureReport report = curvature_report(g, 1.0);
    for (const EdgeCurvature& ec : report.edges) {
      CHECK(std::abs(ec.kappa) <= 1e-9);
    }
  }
}

TEST_CASE("curvature is invariant under uniform weight scaling") {
  std::mt19937_64 rng(59);
  Hypergraph g = oracles::random_connected_hypergraph(rng, 12, 18);
  std::vector<double> scaled = g.weights();
  for (double& w : scaled) w *= 42.0;
  CurvatureReport a = curvature_report(g, g.weights(), 0.5);
  CurvatureReport b = curvature_report(g, scaled, 0.5);
  for (int e = 0; e < g.num_edges(); ++e) {
    CHECK(a.edges[e].kappa == doctest::Approx(b.edges[e].kappa).epsilon(1e-10));
    CHECK(b.edges[e].wasserstein ==
          doctest::Approx(42.0 * a.edges[e].wasserstein).epsilon(1e-10));
    CHECK(b.edges[e].length ==
          doctest::Approx(42.0 * a.edges[e].length).epsilon(1e-10));
  }
}

TEST_CASE("kappa stays strictly below 1 once there are 3+ vertices") {
  std::mt19937_64 rng(61);
  int trials = 0;
  while (trials < 10) {
    Hypergraph g = oracles::random_connected_hypergraph(rng, 10, 16);
    if (g.num_vertices() < 3) continue;  // boundary case covered below
    ++trials;
    CurvatureReport report = curvature_report(g, 0.5);
    for (const EdgeCurvature& ec : report.edges) {
      CHECK(ec.kappa < 1.0);
      CHECK(ec.wasserstein > 0.0);
    }
  }
}

TEST_CASE("two-vertex boundary: identical measures give kappa exactly 1") {
  // With a single pair edge and alpha = 1/2 both endpoint measures are
  // {1/2, 1/2}, so transport is free; any other alpha breaks the symmetry.
  Hypergraph g(2, {Hyperedge({0, 1})}, {3.0});
  EdgeCurvature half = hyperedge_curvature(g, g.weights(), 0.5, 0);
  CHECK(half.wasserstein == 0.0);
  CHECK(half.kappa == 1.0);
  EdgeCurvature skew = hyperedge_curvature(g, g.weights(), 0.3, 0);
  CHECK(skew.wasserstein > 0.0);
  CHECK(skew.kappa < 1.0);
  // Mass that must move is |alpha - (1-alpha)| = 0.4 across distance 3.
  CHECK(skew.wasserstein == doctest::Approx(1.2).epsilon(1e-12));
}

TEST_CASE("twin vertices (identical incidence) are interchangeable") {
  // Vertices 1 and 2 sit in exactly the same hyperedges.
  Hypergraph g(4,
               {Hyperedge({0, 1, 2}), Hyperedge({1, 2, 3}), Hyperedge({0, 3})},
               {1.0, 2.0, 1.5});
  CurvatureEngine engine(g, g.weights(), 0.5);
  CHECK(engine.representative(2) == 1);
  CHECK(engine.representative(1) == 1);
  CHECK(engine.representative(3) == 3);

  // The cached, representative-mapped cost must equal a from-scratch solve
  // for the original pair.
  double through_engine = engine.pair_cost(2, 3);
  DistanceCache dist(g, g.weights());
  ProbabilityMeasure mu = vertex_measure(g, 2, 0.5);
  ProbabilityMeasure nu = vertex_measure(g, 3, 0.5);
  double direct =
      wasserstein1(mu, nu, [&dist](VertexId a, VertexId b) {
        return dist(a, b);
      }).cost;
  CHECK(through_engine == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("engine pair costs match naive per-pair solves on random graphs") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 8; ++trial) {
    Hypergraph g = oracles::random_connected_hypergraph(rng, 10, 14);
    CurvatureEngine engine(g, g.weights(), 0.5);
    DistanceCache dist(g, g.weights());
    auto metric = [&dist](VertexId a, VertexId b) { return dist(a, b); };
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      for (VertexId v = u + 1; v < g.num_vertices(); ++v) {
        double direct = wasserstein1(vertex_measure(g, u, 0.5),
                                     vertex_measure(g, v, 0.5), metric)
                            .cost;
        CHECK(engine.pair_cost(u, v) == doctest::Approx(direct).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("batch report equals single-edge evaluation and ignores threads") {
  std::mt19937_64 rng(71);
  Hypergraph g = oracles::random_connected_hypergraph(rng, 14, 20);
  CurvatureReport one = curvature_report(g, g.weights(), 0.5, 1);
  CurvatureReport four = curvature_report(g, g.weights(), 0.5, 4);
  for (int e = 0; e < g.num_edges(); ++e) {
    // Bitwise agreement: same solver calls, same summation order.
    CHECK(one.edges[e].kappa == four.edges[e].kappa);
    CHECK(one.edges[e].wasserstein == four.edges[e].wasserstein);
    EdgeCurvature single = hyperedge_curvature(g, g.weights(), 0.5, e);
    CHECK(one.edges[e].kappa == single.kappa);
  }
}

TEST_CASE("duality certificate validates engine pair costs") {
  std::mt19937_64 rng(73);
  Hypergraph g = oracles::random_connected_hypergraph(rng, 12, 18);
  DistanceCache dist(g, g.weights());
  auto metric = [&dist](VertexId a, VertexId b) { return dist(a, b); };
  for (VertexId u = 0; u < std::min<VertexId>(g.num_vertices(), 6); ++u) {
    for (VertexId v = u + 1; v < std::min<VertexId>(g.num_vertices(), 6);
         ++v) {
      ProbabilityMeasure mu = vertex_measure(g, u, 0.5);
      ProbabilityMeasure nu = vertex_measure(g, v, 0.5);
      TransportPlan plan = wasserstein1(mu, nu, metric);
      DualCertificate cert = dual_certificate(mu, nu, metric, plan);
      CHECK(std::abs(cert.gap) <= 1e-8);
    }
  }
}
