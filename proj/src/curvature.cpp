#include "hyperrcd/curvature.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace hyperrcd {

CurvatureEngine::CurvatureEngine(const Hypergraph& g,
                                 std::span<const double> weights, double alpha,
                                 int threads)
    : g_(g),
      weights_(weights.begin(), weights.end()),
      alpha_(alpha),
      threads_(std::max(1, threads)),
      dist_(g, weights) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    fail(ErrorCode::AlphaOutOfRange,
         "alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  measures_.resize(g.num_vertices());

  // Group vertices by incidence list. Incidence vectors are built in edge
  // order, so equal sets compare equal directly.
  twin_rep_.resize(g.num_vertices());
  twin_second_.assign(g.num_vertices(), -1);
  std::map<std::vector<int>, VertexId> classes;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto [it, inserted] = classes.try_emplace(g.incident(v), v);
    twin_rep_[v] = it->second;
    if (!inserted && twin_second_[it->second] == -1) {
      twin_second_[it->second] = v;
    }
  }
}

const ProbabilityMeasure& CurvatureEngine::measure(VertexId x) {
  {
    std::lock_guard<std::mutex> lock(measure_mu_);
    if (measures_[x]) return *measures_[x];
  }
  auto fresh = std::make_unique<ProbabilityMeasure>(
      vertex_measure(g_, weights_, x, alpha_));
  std::lock_guard<std::mutex> lock(measure_mu_);
  if (!measures_[x]) measures_[x] = std::move(fresh);
  return *measures_[x];
}

std::pair<VertexId, VertexId> CurvatureEngine::canonical_pair(
    VertexId u, VertexId v) const {
  VertexId ru = twin_rep_[u];
  VertexId rv = twin_rep_[v];
  if (ru != rv) return std::minmax(ru, rv);
  // u and v share an incidence class; any two members of the class give the
  // same W1, so use the first two.
  return {ru, twin_second_[ru]};
}

double CurvatureEngine::pair_cost(VertexId u, VertexId v) {
  if (u == v) return 0.0;
  auto [a, b] = canonical_pair(u, v);
  std::uint64_t key = static_cast<std::uint64_t>(a) *
                          static_cast<std::uint64_t>(g_.num_vertices()) +
                      static_cast<std::uint64_t>(b);
  {
    std::lock_guard<std::mutex> lock(pair_mu_);
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) return it->second;
  }
  const ProbabilityMeasure& mu = measure(a);
  const ProbabilityMeasure& nu = measure(b);
  double cost =
      wasserstein1(mu, nu, [this](VertexId s, VertexId t) {
        return dist_(s, t);
      }).cost;
  std::lock_guard<std::mutex> lock(pair_mu_);
  pair_cache_.emplace(key, cost);
  return cost;
}

EdgeCurvature CurvatureEngine::edge_curvature(int index) {
  const auto& members = g_.edge(index).members;
  EdgeCurvature out;
  out.edge = index;
  out.weight = weights_[index];
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    const std::vector<double>& row = dist_.row(members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      out.wasserstein += pair_cost(members[i], members[j]);
      out.length += row[members[j]];
    }
  }
  if (!(out.length > 0.0)) {
    fail(ErrorCode::InternalError,
         "hyperedge " + std::to_string(index) +
             " has nonpositive length; graph was not validated");
  }
  out.kappa = 1.0 - out.wasserstein / out.length;
  return out;
}

CurvatureReport CurvatureEngine::all() {
  CurvatureReport report;
  report.alpha = alpha_;
  report.edges.resize(g_.num_edges());
  int m = g_.num_edges();
  int workers = std::min(threads_, std::max(1, m));
  if (workers <= 1) {
    for (int e = 0; e < m; ++e) report.edges[e] = edge_curvature(e);
    return report;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (int e = next.fetch_add(1); e < m; e = next.fetch_add(1)) {
        report.edges[e] = edge_curvature(e);
      }
    });
  }
  for (auto& th : pool) th.join();
  return report;
}

std::size_t CurvatureEngine::pair_cache_size() const {
  std::lock_guard<std::mutex> lock(pair_mu_);
  return pair_cache_.size();
}

EdgeCurvature hyperedge_curvature(const Hypergraph& g,
                                  std::span<const double> weights, double alpha,
                                  int index) {
  CurvatureEngine engine(g, weights, alpha);
  return engine.edge_curvature(index);
}

CurvatureReport curvature_report(const Hypergraph& g,
                                 std::span<const double> weights, double alpha,
                                 int threads) {
  CurvatureEngine engine(g, weights, alpha, threads);
  return engine.all();
}

CurvatureReport curvature_report(const Hypergraph& g, double alpha,
                                 int threads) {
  return curvature_report(g, g.weights(), alpha, threads);
}

}  // namespace hyperrcd
