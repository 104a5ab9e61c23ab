#include "hyperrcd/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace hyperrcd {

namespace {

// All randomness flows through these two helpers so generated instances are
// reproducible across standard libraries (distribution objects are not
// portable, raw engine output is).
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int next_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive bounds
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Weighted draw of `count` distinct indices from pool[lo, hi) proportional to
// theta. Linear scans are fine at these pool sizes.
std::vector<VertexId> draw_distinct(std::mt19937_64& rng,
                                    const std::vector<double>& theta, int lo,
                                    int hi, int count) {
  std::vector<char> taken(hi - lo, 0);
  double total = 0.0;
  for (int v = lo; v < hi; ++v) total += theta[v];
  std::vector<VertexId> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    double x = next_unit(rng) * total;
    int chosen = -1;
    for (int v = lo; v < hi; ++v) {
      if (taken[v - lo]) continue;
      x -= theta[v];
      chosen = v;
      if (x <= 0.0) break;
    }
    // Rounding can walk x past the last active entry; `chosen` then holds it.
    taken[chosen - lo] = 1;
    total -= theta[chosen];
    out.push_back(chosen);
  }
  return out;
}

struct UnionFind {
  std::vector<VertexId> parent;
  explicit UnionFind(VertexId n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  VertexId find(VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void check_params(const GenParams& p) {
  auto bad = [](const std::string& msg) {
    fail(ErrorCode::InfeasibleParams, msg);
  };
  if (p.n < 2) bad("need at least 2 vertices, got " + std::to_string(p.n));
  if (p.q < 1 || p.q > p.n) {
    bad("community count " + std::to_string(p.q) +
        " must lie in [1, n=" + std::to_string(p.n) + "]");
  }
  if (!(p.p_intra > 0.0 && p.p_intra <= 1.0)) {
    bad("p_intra must lie in (0, 1], got " + std::to_string(p.p_intra));
  }
  if (p.min_size < 2) bad("hyperedges need at least 2 members");
  if (p.max_size < p.min_size) bad("size range is empty");
  if (p.max_size > p.n) {
    bad("max hyperedge size " + std::to_string(p.max_size) +
        " exceeds vertex count " + std::to_string(p.n));
  }
  if (p.n / p.q < p.min_size) {
    bad("smallest community (" + std::to_string(p.n / p.q) +
        " vertices) cannot host a hyperedge of size " +
        std::to_string(p.min_size));
  }
  if (p.degree_exponent < 0.0 || !std::isfinite(p.degree_exponent)) {
    bad("degree exponent must be a finite value >= 0");
  }
  if (p.total_cardinality == 0 && !(p.avg_degree > 0.0)) {
    bad("either avg_degree or total_cardinality must be positive");
  }
}

}  // namespace

GeneratedInstance generate(const GenParams& params) {
  check_params(params);
  std::mt19937_64 rng(params.seed);

  // Contiguous near-equal blocks; the first n % q blocks get the extra
  // vertex.
  std::vector<int> block_start(params.q + 1, 0);
  for (int c = 0; c < params.q; ++c) {
    int size = params.n / params.q + (c < params.n % params.q ? 1 : 0);
    block_start[c + 1] = block_start[c] + size;
  }
  std::vector<int> label(params.n);
  for (int c = 0; c < params.q; ++c) {
    for (int v = block_start[c]; v < block_start[c + 1]; ++v) label[v] = c;
  }

  // Propensities: uniform at exponent 0, increasingly skewed otherwise,
  // normalized so each block sums to 1.
  std::vector<double> theta(params.n, 1.0);
  if (params.degree_exponent > 0.0) {
    for (int v = 0; v < params.n; ++v) {
      double u = next_unit(rng);
      theta[v] = std::pow(u + 1e-12, params.degree_exponent);
    }
  }
  for (int c = 0; c < params.q; ++c) {
    double sum = 0.0;
    for (int v = block_start[c]; v < block_start[c + 1]; ++v) sum += theta[v];
    for (int v = block_start[c]; v < block_start[c + 1]; ++v) theta[v] /= sum;
  }

  std::size_t target = params.total_cardinality != 0
                           ? params.total_cardinality
                           : static_cast<std::size_t>(std::llround(
                                 params.avg_degree * params.n));

  GeneratedInstance out{Hypergraph(params.n, {}), Partition(label)};
  std::vector<Hyperedge> edges;
  UnionFind uf(params.n);
  std::size_t cardinality = 0;

  while (cardinality < target) {
    bool intra = params.q == 1 || next_unit(rng) < params.p_intra;
    std::vector<VertexId> members;
    if (intra) {
      // Block chosen proportional to its size, then members within it.
      int pick = next_int(rng, 0, params.n - 1);
      int c = static_cast<int>(
          std::upper_bound(block_start.begin(), block_start.end(), pick) -
          block_start.begin() - 1);
      int cap = std::min(params.max_size, block_start[c + 1] - block_start[c]);
      int s = next_int(rng, params.min_size, cap);
      members = draw_distinct(rng, theta, block_start[c], block_start[c + 1], s);
      ++out.intra_edges;
    } else {
      int s = next_int(rng, params.min_size, params.max_size);
      members = draw_distinct(rng, theta, 0, params.n, s);
      bool spread = false;
      for (VertexId v : members) spread |= label[v] != label[members[0]];
      if (!spread) {
        // Replace the last member with a theta-proportional draw from the
        // other blocks so the hyperedge really crosses communities.
        int c = label[members[0]];
        std::vector<double> masked = theta;
        for (int v = block_start[c]; v < block_start[c + 1]; ++v) {
          masked[v] = 0.0;
        }
        members.back() = draw_distinct(rng, masked, 0, params.n, 1)[0];
      }
      ++out.inter_edges;
    }
    Hyperedge h(std::move(members));
    cardinality += h.size();
    for (std::size_t i = 1; i < h.members.size(); ++i) {
      uf.unite(h.members[0], h.members[i]);
    }
    edges.push_back(std::move(h));
  }

  // Bridging pass: star hyperedges over component representatives, sized so
  // at most max(1, q-1) of them restore connectivity.
  std::vector<VertexId> reps;
  for (VertexId v = 0; v < params.n; ++v) {
    if (uf.find(v) == v) reps.push_back(v);
  }
  if (reps.size() > 1) {
    int comps = static_cast<int>(reps.size());
    int budget = std::max(1, params.q - 1);
    int arm = (comps - 1 + budget - 1) / budget;  // reps joined per bridge
    for (int at = 1; at < comps; at += arm) {
      std::vector<VertexId> members = {reps[0]};
      for (int k = at; k < std::min(at + arm, comps); ++k) {
        members.push_back(reps[k]);
      }
      edges.push_back(Hyperedge(std::move(members)));
      ++out.bridge_edges;
    }
  }

  out.graph = Hypergraph(params.n, std::move(edges));
  validate_or_throw(out.graph);
  return out;
}

std::vector<GenParams> series(const std::string& series_id) {
  std::vector<GenParams> out;
  if (series_id == "D1") {
    for (int deg = 3; deg <= 30; deg += 3) {
      GenParams p;
      p.n = 100;
      p.q = 3;
      p.p_intra = 0.85;
      p.avg_degree = deg;
      out.push_back(p);
    }
  } else if (series_id == "D2") {
    for (int i = 0; i < 8; ++i) {
      GenParams p;
      p.n = 100;
      p.q = 3;
      p.avg_degree = 3;
      p.p_intra = 0.15 + 0.1 * i;
      out.push_back(p);
    }
  } else if (series_id == "D3") {
    for (int n = 100; n <= 1000; n += 100) {
      GenParams p;
      p.n = n;
      p.q = 10;
      p.p_intra = 0.85;
      p.avg_degree = 10;
      out.push_back(p);
    }
  } else {
    fail(ErrorCode::InfeasibleParams,
         "unknown series '" + series_id + "', expected D1, D2 or D3");
  }
  return out;
}

}  // namespace hyperrcd
