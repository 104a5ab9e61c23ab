#pragma once

#include <vector>

#include "hyperrcd/errors.hpp"

namespace hyperrcd {

// A partition of vertices 0..n-1 into communities with dense ids from 0.
struct Partition {
  std::vector<int> labels;

  Partition() = default;
  explicit Partition(std::vector<int> l) : labels(std::move(l)) {}

  std::size_t size() const { return labels.size(); }
  int num_communities() const;
};

// Relabels communities by first appearance (vertex order), so two partitions
// of the same vertex set compare equal iff they induce the same grouping.
Partition canonicalize(const Partition& p);

struct ContingencyTable {
  std::vector<std::vector<long>> counts;  // rows: x communities, cols: y
  std::vector<long> row_sums;
  std::vector<long> col_sums;
  long total = 0;
};

ContingencyTable contingency(const Partition& x, const Partition& y);

// Normalized mutual information between two partitions of the same vertex
// set, natural logarithm. 1 means identical grouping, 0 means independent.
// When both partitions are a single community the formula degenerates to 0/0;
// that case is defined as 1 (they are then the same partition).
double nmi(const Partition& x, const Partition& y);

}  // namespace hyperrcd
