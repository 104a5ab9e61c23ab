#pragma once

#include <iosfwd>
#include <string>

#include "hyperrcd/hypergraph.hpp"
#include "hyperrcd/metrics.hpp"

namespace hyperrcd {

enum class FileFormat {
  HgText,   // "n m" header, then one "w v1 v2 ..." line per hyperedge
  HgJson,   // {"n": ..., "hyperedges": [{"w": ..., "members": [...]}]}
  EdgeList  // one hyperedge per line of vertex ids, all weights 1
};

// Maps "hg-text" / "hg-json" / "hyperedge-list"; throws ParseError otherwise.
FileFormat parse_format(const std::string& name);

// Infers a format from the file extension (.hg, .json, .hyperedges/.hel);
// throws ParseError when the extension is unknown.
FileFormat detect_format(const std::string& path);

struct IngestStats {
  int raw_records = 0;   // hyperedge records seen in the file
  int kept_records = 0;  // records that became hyperedges
  int dropped_small = 0; // edge-list records with fewer than 2 distinct ids
  std::size_t raw_cardinality = 0;  // sum of raw record sizes
};

struct IngestResult {
  Hypergraph graph;
  IngestStats stats;
};

// Parses and validates. hg-text and hg-json are strict: any malformed or
// out-of-range content is a ParseError and validation failures are thrown
// as-is. The edge-list format follows dataset-release conventions: blank
// lines and '#' comments are skipped, the vertex count is max id + 1, and
// records with fewer than two distinct vertices are counted and dropped
// (attribute-derived datasets legitimately contain singleton groups, which
// cannot be hyperedges).
IngestResult load_hypergraph(const std::string& path, FileFormat format);
IngestResult load_hypergraph(const std::string& path);  // detect by extension

void save_hg_text(const std::string& path, const Hypergraph& g);
void save_hg_json(const std::string& path, const Hypergraph& g);

// One integer label per line.
Partition load_labels(const std::string& path);
void save_labels(const std::string& path, const Partition& p);

// Clique-expansion exports for external tools.
void write_expansion_dot(std::ostream& os, const WeightedGraph& wg);
void write_expansion_csv(std::ostream& os, const WeightedGraph& wg);

}  // namespace hyperrcd
