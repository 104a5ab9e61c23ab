#include "hyperrcd/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace hyperrcd {

Hyperedge::Hyperedge(std::vector<VertexId> m) : members(std::move(m)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool Hyperedge::contains(VertexId v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

Hypergraph::Hypergraph(VertexId num_vertices, std::vector<Hyperedge> edges,
                       std::vector<double> weights)
    : n_(num_vertices), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (weights_.empty() && !edges_.empty()) {
    weights_.assign(edges_.size(), 1.0);  // unweighted convenience
  }
  if (weights_.size() != edges_.size()) {
    fail(ErrorCode::InternalError,
         "hypergraph constructed with " + std::to_string(edges_.size()) +
             " hyperedges but " + std::to_string(weights_.size()) + " weights");
  }
  incidence_.assign(static_cast<std::size_t>(std::max<VertexId>(n_, 0)), {});
  for (int e = 0; e < num_edges(); ++e) {
    for (VertexId v : edges_[e].members) {
      if (v >= 0 && v < n_) incidence_[v].push_back(e);
    }
  }
}

Hypergraph::Hypergraph(VertexId num_vertices, std::vector<Hyperedge> edges)
    : Hypergraph(num_vertices, std::move(edges), {}) {}

std::size_t Hypergraph::pair_count() const {
  std::size_t total = 0;
  for (const Hyperedge& e : edges_) total += e.size() * (e.size() - 1) / 2;
  return total;
}

std::size_t Hypergraph::total_cardinality() const {
  std::size_t total = 0;
  for (const Hyperedge& e : edges_) total += e.size();
  return total;
}

Diagnostics validate(const Hypergraph& g) {
  for (int e = 0; e < g.num_edges(); ++e) {
    const Hyperedge& h = g.edge(e);
    if (h.size() < 2) {
      return {false, ErrorCode::DegenerateHyperedge,
              "hyperedge " + std::to_string(e) + " has " +
                  std::to_string(h.size()) + " member(s), need at least 2"};
    }
    for (VertexId v : h.members) {
      if (v < 0 || v >= g.num_vertices()) {
        return {false, ErrorCode::DegenerateHyperedge,
                "hyperedge " + std::to_string(e) + " references vertex " +
                    std::to_string(v) + " outside [0, " +
                    std::to_string(g.num_vertices()) + ")"};
      }
    }
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    double w = g.weight(e);
    if (!std::isfinite(w)) {
      return {false, ErrorCode::NonFiniteWeight,
              "hyperedge " + std::to_string(e) + " has non-finite weight"};
    }
    if (w <= 0.0) {
      return {false, ErrorCode::NonPositiveWeight,
              "hyperedge " + std::to_string(e) + " has weight " +
                  std::to_string(w) + ", need > 0"};
    }
  }
  if (g.num_vertices() > 0) {
    // BFS over hyperedge membership; an isolated vertex is unreachable by
    // construction since it sits in no hyperedge.
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<char> edge_done(g.num_edges(), 0);
    std::vector<VertexId> stack = {0};
    seen[0] = 1;
    VertexId reached = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (int e : g.incident(v)) {
        if (edge_done[e]) continue;
        edge_done[e] = 1;
        for (VertexId u : g.edge(e).members) {
          if (!seen[u]) {
            seen[u] = 1;
            ++reached;
            stack.push_back(u);
          }
        }
      }
    }
    if (reached < g.num_vertices()) {
      VertexId witness = 0;
      while (seen[witness]) ++witness;
      return {false, ErrorCode::Disconnected,
              "vertex " + std::to_string(witness) +
                  " is not reachable from vertex 0"};
    }
  }
  return {};
}

void validate_or_throw(const Hypergraph& g) {
  Diagnostics d = validate(g);
  if (!d.ok) fail(d.code, d.detail);
}

std::vector<double> sssp(const Hypergraph& g, std::span<const double> weights,
                         VertexId source) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(g.num_vertices(), inf);
  if (source < 0 || source >= g.num_vertices()) {
    fail(ErrorCode::InternalError,
         "sssp source " + std::to_string(source) + " out of range");
  }
  dist[source] = 0.0;

  // (distance, vertex) min-heap; ties resolve to the smaller vertex id so
  // runs are deterministic across platforms.
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.emplace(0.0, source);

  // A hyperedge only needs to be expanded from its first settled member;
  // later members cannot offer shorter routes through it.
  std::vector<char> edge_done(g.num_edges(), 0);
  std::vector<char> settled(g.num_vertices(), 0);

  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (settled[v]) continue;
    settled[v] = 1;
    for (int e : g.incident(v)) {
      if (edge_done[e]) continue;
      edge_done[e] = 1;
      double through = d + weights[e];
      for (VertexId u : g.edge(e).members) {
        if (through < dist[u]) {
          dist[u] = through;
          heap.emplace(through, u);
        }
      }
    }
  }
  return dist;
}

std::vector<double> sssp(const Hypergraph& g, VertexId source) {
  return sssp(g, g.weights(), source);
}

double hyperedge_length(const Hypergraph& g, std::span<const double> weights,
                        int index) {
  const Hyperedge& h = g.edge(index);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < h.members.size(); ++i) {
    std::vector<double> dist = sssp(g, weights, h.members[i]);
    for (std::size_t j = i + 1; j < h.members.size(); ++j) {
      total += dist[h.members[j]];
    }
  }
  return total;
}

double hyperedge_length(const Hypergraph& g, int index) {
  return hyperedge_length(g, g.weights(), index);
}

WeightedGraph clique_expansion(const Hypergraph& g,
                               std::span<const double> weights) {
  std::vector<WeightedGraph::Edge> raw;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& m = g.edge(e).members;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        raw.push_back({m[i], m[j], weights[e]});
      }
    }
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  WeightedGraph out;
  out.num_vertices = g.num_vertices();
  for (const auto& e : raw) {
    if (!out.edges.empty() && out.edges.back().u == e.u &&
        out.edges.back().v == e.v) {
      out.edges.back().w += e.w;
    } else {
      out.edges.push_back(e);
    }
  }
  return out;
}

WeightedGraph clique_expansion(const Hypergraph& g) {
  return clique_expansion(g, g.weights());
}

DistanceCache::DistanceCache(const Hypergraph& g,
                             std::span<const double> weights)
    : g_(g), weights_(weights.begin(), weights.end()) {
  rows_.resize(g.num_vertices());
}

const std::vector<double>& DistanceCache::row(VertexId source) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (rows_[source]) return *rows_[source];
  }
  auto fresh =
      std::make_unique<std::vector<double>>(sssp(g_, weights_, source));
  std::lock_guard<std::mutex> lock(mu_);
  if (!rows_[source]) {
    rows_[source] = std::move(fresh);
    ++computed_;
  }
  return *rows_[source];
}

int DistanceCache::rows_computed() const {
  std::lock_guard<std::mutex> lock(mu_);
  return computed_;
}

}  // namespace hyperrcd
