#include "hyperrcd/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hyperrcd {

namespace {

constexpr double kMassEps = 1e-15;  // below this, residual mass is noise

// Supply and demand drift apart by an ulp per augmentation (inexact
// subtraction), so the endgame can leave one side holding dust the other
// side cannot absorb. Stopping once either side is down to this much mass
// costs at most kDustTol * diameter -- measures are normalized to total 1,
// orders of magnitude inside every tolerance used on the results.
constexpr double kDustTol = 1e-12;

// One side of the reduced (residual) problem.
struct Side {
  std::vector<VertexId> vertex;
  std::vector<double> mass;
};

// Successive shortest augmenting paths over the dense bipartite network.
// Nodes 0..r-1 are sources, r..r+c-1 sinks. Potentials keep reduced costs
// nonnegative so each round is a plain Dijkstra. Returns the final flow
// matrix; `pot` comes back with the optimal dual values.
std::vector<double> solve_ssp(const Side& src, const Side& dst,
                              const std::vector<double>& cost,
                              std::vector<double>& pot) {
  const int r = static_cast<int>(src.vertex.size());
  const int c = static_cast<int>(dst.vertex.size());
  const int v = r + c;
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<double> supply = src.mass;
  std::vector<double> demand = dst.mass;
  std::vector<double> flow(static_cast<std::size_t>(r) * c, 0.0);
  pot.assign(v, 0.0);

  std::vector<double> dist(v);
  std::vector<int> parent(v);
  std::vector<char> done(v);

  // Every augmentation exhausts a supply, a demand, or a backward arc, so
  // r*c + v rounds is already generous.
  const long max_rounds = static_cast<long>(r) * c + v + 16;
  long rounds = 0;

  while (true) {
    double remaining = 0.0;
    for (double s : supply) remaining += s;
    double demanded = 0.0;
    for (double d : demand) demanded += d;
    if (std::min(remaining, demanded) <= kDustTol) break;
    if (++rounds > max_rounds) {
      fail(ErrorCode::InternalError,
           "transport solver exceeded its augmentation budget");
    }

    std::fill(dist.begin(), dist.end(), inf);
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(done.begin(), done.end(), 0);
    for (int i = 0; i < r; ++i) {
      if (supply[i] > kMassEps) dist[i] = 0.0;
    }

    int target = -1;
    for (int step = 0; step < v; ++step) {
      int u = -1;
      double best = inf;
      for (int x = 0; x < v; ++x) {
        if (!done[x] && dist[x] < best) {
          best = dist[x];
          u = x;
        }
      }
      if (u < 0) break;
      done[u] = 1;
      if (u >= r && demand[u - r] > kMassEps) {
        target = u;
        break;
      }
      if (u < r) {
        // Forward arcs: source u can ship to any sink.
        for (int j = 0; j < c; ++j) {
          int y = r + j;
          if (done[y]) continue;
          double nd = dist[u] + cost[static_cast<std::size_t>(u) * c + j] +
                      pot[u] - pot[y];
          if (nd < dist[y]) {
            dist[y] = nd;
            parent[y] = u;
          }
        }
      } else {
        // Backward arcs: undo previously shipped mass.
        int j = u - r;
        for (int i = 0; i < r; ++i) {
          if (done[i] || flow[static_cast<std::size_t>(i) * c + j] <= 0.0) {
            continue;
          }
          double nd = dist[u] - cost[static_cast<std::size_t>(i) * c + j] +
                      pot[u] - pot[i];
          if (nd < dist[i]) {
            dist[i] = nd;
            parent[i] = u;
          }
        }
      }
    }
    if (target < 0) {
      fail(ErrorCode::InternalError,
           "transport network ran out of reachable demand");
    }

    double reached = dist[target];
    for (int x = 0; x < v; ++x) {
      pot[x] += std::min(dist[x], reached);
    }

    // Bottleneck along the augmenting path.
    double amount = demand[target - r];
    for (int x = target; parent[x] != -1; x = parent[x]) {
      int p = parent[x];
      if (p >= r && x < r) {
        amount =
            std::min(amount, flow[static_cast<std::size_t>(x) * c + (p - r)]);
      }
    }
    int origin = target;
    while (parent[origin] != -1) origin = parent[origin];
    amount = std::min(amount, supply[origin]);
    if (!(amount > 0.0)) {
      fail(ErrorCode::InternalError, "transport augmentation stalled");
    }

    for (int x = target; parent[x] != -1; x = parent[x]) {
      int p = parent[x];
      if (p < r) {
        flow[static_cast<std::size_t>(p) * c + (x - r)] += amount;
      } else {
        flow[static_cast<std::size_t>(x) * c + (p - r)] -= amount;
      }
    }
    supply[origin] -= amount;
    demand[target - r] -= amount;
    if (supply[origin] < kMassEps) supply[origin] = 0.0;
    if (demand[target - r] < kMassEps) demand[target - r] = 0.0;
  }
  return flow;
}

}  // namespace

TransportPlan wasserstein1(const ProbabilityMeasure& mu,
                           const ProbabilityMeasure& nu,
                           const DistanceFn& dist) {
  double total_mu = mu.total();
  double total_nu = nu.total();
  if (std::abs(total_mu - total_nu) > 1e-9) {
    fail(ErrorCode::UnbalancedMeasures,
         "measure totals differ: " + std::to_string(total_mu) + " vs " +
             std::to_string(total_nu));
  }
  if (!(total_mu > 0.0) || !(total_nu > 0.0)) {
    fail(ErrorCode::UnbalancedMeasures, "measures must carry positive mass");
  }

  TransportPlan result;

  // Point masses do not need a solver.
  if (mu.support.size() == 1 && nu.support.size() == 1) {
    VertexId u = mu.support[0];
    VertexId x = nu.support[0];
    double d = (u == x) ? 0.0 : dist(u, x);
    result.cost = d;
    result.plan.push_back({u, x, 1.0});
    result.source_potentials.emplace_back(u, d);
    return result;
  }

  // Shared mass stays in place; only the difference needs transporting.
  // With a metric cost this loses nothing (moving shared mass can never
  // beat leaving it put, by the triangle inequality).
  Side src, dst;
  std::size_t i = 0, j = 0;
  while (i < mu.support.size() || j < nu.support.size()) {
    VertexId a = i < mu.support.size() ? mu.support[i]
                                       : std::numeric_limits<VertexId>::max();
    VertexId b = j < nu.support.size() ? nu.support[j]
                                       : std::numeric_limits<VertexId>::max();
    if (a == b) {
      double ma = mu.mass[i] / total_mu;
      double mb = nu.mass[j] / total_nu;
      double shared = std::min(ma, mb);
      if (shared > 0.0) result.plan.push_back({a, a, shared});
      double diff = ma - mb;
      if (diff > kMassEps) {
        src.vertex.push_back(a);
        src.mass.push_back(diff);
      } else if (diff < -kMassEps) {
        dst.vertex.push_back(a);
        dst.mass.push_back(-diff);
      }
      ++i;
      ++j;
    } else if (a < b) {
      src.vertex.push_back(a);
      src.mass.push_back(mu.mass[i] / total_mu);
      ++i;
    } else {
      dst.vertex.push_back(b);
      dst.mass.push_back(nu.mass[j] / total_nu);
      ++j;
    }
  }

  double residual = 0.0;
  for (double m : src.mass) residual += m;
  if (residual <= kMassEps || dst.vertex.empty()) {
    // Measures agree (up to noise): nothing to move.
    result.cost = 0.0;
    return result;
  }

  // Rebalance rounding drift so supply and demand match exactly.
  double residual_dst = 0.0;
  for (double m : dst.mass) residual_dst += m;
  double scale = residual / residual_dst;
  for (double& m : dst.mass) m *= scale;

  const int r = static_cast<int>(src.vertex.size());
  const int c = static_cast<int>(dst.vertex.size());
  std::vector<double> cost(static_cast<std::size_t>(r) * c);
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < c; ++b) {
      double d = src.vertex[a] == dst.vertex[b]
                     ? 0.0
                     : dist(src.vertex[a], dst.vertex[b]);
      if (!std::isfinite(d) || d < 0.0) {
        fail(ErrorCode::InternalError,
             "ground distance between vertices " +
                 std::to_string(src.vertex[a]) + " and " +
                 std::to_string(dst.vertex[b]) + " is not a finite metric");
      }
      cost[static_cast<std::size_t>(a) * c + b] = d;
    }
  }

  std::vector<double> pot;
  std::vector<double> flow = solve_ssp(src, dst, cost, pot);

  double w1 = 0.0;
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < c; ++b) {
      double f = flow[static_cast<std::size_t>(a) * c + b];
      if (f > 0.0) {
        w1 += f * cost[static_cast<std::size_t>(a) * c + b];
        result.plan.push_back({src.vertex[a], dst.vertex[b], f});
      }
    }
  }
  result.cost = w1;
  result.source_potentials.reserve(r);
  for (int a = 0; a < r; ++a) {
    result.source_potentials.emplace_back(src.vertex[a], -pot[a]);
  }
  return result;
}

DualCertificate dual_certificate(const ProbabilityMeasure& mu,
                                 const ProbabilityMeasure& nu,
                                 const DistanceFn& dist,
                                 const TransportPlan& plan) {
  // Union of supports, sorted.
  std::vector<VertexId> points;
  std::merge(mu.support.begin(), mu.support.end(), nu.support.begin(),
             nu.support.end(), std::back_inserter(points));
  points.erase(std::unique(points.begin(), points.end()), points.end());

  DualCertificate cert;
  cert.potential.reserve(points.size());
  double total_mu = mu.total();
  double total_nu = nu.total();

  double pairing = 0.0;
  for (VertexId w : points) {
    // McShane extension of the solver's source potentials: the largest
    // 1-Lipschitz function matching them. On sinks that received mass it
    // reproduces the solver's dual value exactly.
    double phi = 0.0;
    if (!plan.source_potentials.empty()) {
      phi = -std::numeric_limits<double>::infinity();
      for (const auto& [u, p] : plan.source_potentials) {
        double candidate = p - (u == w ? 0.0 : dist(u, w));
        phi = std::max(phi, candidate);
      }
    }
    cert.potential.emplace_back(w, phi);
    pairing += phi * (mu.at(w) / total_mu - nu.at(w) / total_nu);
  }
  cert.gap = plan.cost - pairing;
  return cert;
}

}  // namespace hyperrcd
