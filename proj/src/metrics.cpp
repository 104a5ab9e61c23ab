#include "hyperrcd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace hyperrcd {

int Partition::num_communities() const {
  if (labels.empty()) return 0;
  return *std::max_element(labels.begin(), labels.end()) + 1;
}

Partition canonicalize(const Partition& p) {
  Partition out;
  out.labels.resize(p.labels.size());
  std::unordered_map<int, int> remap;
  int next = 0;
  for (std::size_t v = 0; v < p.labels.size(); ++v) {
    auto [it, inserted] = remap.try_emplace(p.labels[v], next);
    if (inserted) ++next;
    out.labels[v] = it->second;
  }
  return out;
}

ContingencyTable contingency(const Partition& x, const Partition& y) {
  if (x.size() != y.size()) {
    fail(ErrorCode::LabelLengthMismatch,
         "partitions cover " + std::to_string(x.size()) + " vs " +
             std::to_string(y.size()) + " vertices");
  }
  if (x.size() == 0) {
    fail(ErrorCode::LabelLengthMismatch, "partitions are empty");
  }
  Partition cx = canonicalize(x);
  Partition cy = canonicalize(y);
  ContingencyTable t;
  int a = cx.num_communities();
  int b = cy.num_communities();
  t.counts.assign(a, std::vector<long>(b, 0));
  t.row_sums.assign(a, 0);
  t.col_sums.assign(b, 0);
  t.total = static_cast<long>(cx.size());
  for (std::size_t v = 0; v < cx.size(); ++v) {
    ++t.counts[cx.labels[v]][cy.labels[v]];
    ++t.row_sums[cx.labels[v]];
    ++t.col_sums[cy.labels[v]];
  }
  return t;
}

double nmi(const Partition& x, const Partition& y) {
  ContingencyTable t = contingency(x, y);

  // Identical groupings score exactly 1 -- this also settles the degenerate
  // case where both sides are a single community (0/0 in the formula).
  if (canonicalize(x).labels == canonicalize(y).labels) return 1.0;

  double n = static_cast<double>(t.total);
  double numer = 0.0;
  for (std::size_t a = 0; a < t.counts.size(); ++a) {
    for (std::size_t b = 0; b < t.counts[a].size(); ++b) {
      long c = t.counts[a][b];
      if (c == 0) continue;
      numer += static_cast<double>(c) *
               std::log(static_cast<double>(c) * n /
                        (static_cast<double>(t.row_sums[a]) *
                         static_cast<double>(t.col_sums[b])));
    }
  }
  double denom = 0.0;
  for (long a : t.row_sums) {
    denom += static_cast<double>(a) * std::log(static_cast<double>(a) / n);
  }
  for (long b : t.col_sums) {
    denom += static_cast<double>(b) * std::log(static_cast<double>(b) / n);
  }
  if (denom == 0.0) {
    // One side is a single community and the other is not (the both-single
    // case returned above)... except it cannot be: a single-community side
    // contributes 0 and a multi-community side contributes < 0. Defensive:
    return 0.0;
  }
  double value = -2.0 * numer / denom;
  // Clip arithmetic dust just outside [0, 1].
  if (value < 0.0 && value > -1e-12) value = 0.0;
  return value;
}

}  // namespace hyperrcd
