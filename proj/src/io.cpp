#include "hyperrcd/io.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace hyperrcd {

namespace {

[[noreturn]] void parse_fail(const std::string& path, int line,
                             const std::string& msg) {
  fail(ErrorCode::ParseError, path + ":" + std::to_string(line) + ": " + msg);
}

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::ParseError, path + ": cannot open file for reading");
  }
  return in;
}

std::ofstream create_or_fail(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    fail(ErrorCode::ParseError, path + ": cannot open file for writing");
  }
  out.precision(std::numeric_limits<double>::max_digits10);
  return out;
}

bool blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

IngestResult load_hg_text(const std::string& path) {
  std::ifstream in = open_or_fail(path);
  std::string line;
  int lineno = 0;

  long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    std::istringstream head(line);
    if (!(head >> n >> m) || n < 0 || m < 0) {
      parse_fail(path, lineno, "expected header 'n m' with nonnegative counts");
    }
    std::string extra;
    if (head >> extra) parse_fail(path, lineno, "trailing content after 'n m'");
    break;
  }
  if (n < 0) parse_fail(path, lineno, "missing 'n m' header");

  std::vector<Hyperedge> edges;
  std::vector<double> weights;
  IngestStats stats;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    if (static_cast<long>(edges.size()) == m) {
      parse_fail(path, lineno,
                 "more hyperedge lines than the declared m = " +
                     std::to_string(m));
    }
    std::istringstream row(line);
    double w;
    if (!(row >> w)) {
      parse_fail(path, lineno, "expected 'w v1 v2 ...' (weight first)");
    }
    std::vector<VertexId> members;
    long v;
    while (row >> v) {
      if (v < 0 || v >= n) {
        parse_fail(path, lineno,
                   "vertex id " + std::to_string(v) + " out of range [0, " +
                       std::to_string(n) + ")");
      }
      members.push_back(static_cast<VertexId>(v));
    }
    if (!row.eof()) parse_fail(path, lineno, "non-numeric vertex id");
    ++stats.raw_records;
    stats.raw_cardinality += members.size();
    edges.push_back(Hyperedge(std::move(members)));
    weights.push_back(w);
  }
  if (static_cast<long>(edges.size()) != m) {
    parse_fail(path, lineno,
               "declared m = " + std::to_string(m) + " hyperedges, found " +
                   std::to_string(edges.size()));
  }
  stats.kept_records = stats.raw_records;
  IngestResult result{
      Hypergraph(static_cast<VertexId>(n), std::move(edges), std::move(weights)),
      stats};
  validate_or_throw(result.graph);
  return result;
}

IngestResult load_hg_json(const std::string& path) {
  std::ifstream in = open_or_fail(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
  IngestStats stats;
  try {
    long n = doc.at("n").get<long>();
    if (n < 0) fail(ErrorCode::ParseError, path + ": negative vertex count");
    std::vector<Hyperedge> edges;
    std::vector<double> weights;
    for (const auto& item : doc.at("hyperedges")) {
      double w = item.at("w").get<double>();
      std::vector<VertexId> members;
      for (const auto& vj : item.at("members")) {
        long v = vj.get<long>();
        if (v < 0 || v >= n) {
          fail(ErrorCode::ParseError,
               path + ": vertex id " + std::to_string(v) +
                   " out of range [0, " + std::to_string(n) + ")");
        }
        members.push_back(static_cast<VertexId>(v));
      }
      ++stats.raw_records;
      stats.raw_cardinality += members.size();
      edges.push_back(Hyperedge(std::move(members)));
      weights.push_back(w);
    }
    stats.kept_records = stats.raw_records;
    IngestResult result{Hypergraph(static_cast<VertexId>(n), std::move(edges),
                                   std::move(weights)),
                        stats};
    validate_or_throw(result.graph);
    return result;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

IngestResult load_edge_list(const std::string& path) {
  std::ifstream in = open_or_fail(path);
  std::string line;
  int lineno = 0;
  std::vector<Hyperedge> edges;
  IngestStats stats;
  long max_id = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    std::istringstream row(line);
    std::vector<VertexId> members;
    long v;
    while (row >> v) {
      if (v < 0) {
        parse_fail(path, lineno, "negative vertex id " + std::to_string(v));
      }
      max_id = std::max(max_id, v);
      members.push_back(static_cast<VertexId>(v));
    }
    if (!row.eof()) parse_fail(path, lineno, "non-numeric vertex id");
    if (members.empty()) continue;
    ++stats.raw_records;
    stats.raw_cardinality += members.size();
    Hyperedge h(std::move(members));
    if (h.size() < 2) {
      // Singleton group: real in attribute-derived datasets, meaningless as
      // a hyperedge. Count it and move on.
      ++stats.dropped_small;
      continue;
    }
    edges.push_back(std::move(h));
  }
  if (edges.empty()) {
    fail(ErrorCode::ParseError,
         path + ": no usable hyperedge records (vertex count is inferred "
                "from them)");
  }
  stats.kept_records = stats.raw_records - stats.dropped_small;
  IngestResult result{
      Hypergraph(static_cast<VertexId>(max_id + 1), std::move(edges)), stats};
  validate_or_throw(result.graph);
  return result;
}

}  // namespace

FileFormat parse_format(const std::string& name) {
  if (name == "hg-text") return FileFormat::HgText;
  if (name == "hg-json") return FileFormat::HgJson;
  if (name == "hyperedge-list") return FileFormat::EdgeList;
  fail(ErrorCode::ParseError,
       "unknown format '" + name +
           "', expected hg-text, hg-json or hyperedge-list");
}

FileFormat detect_format(const std::string& path) {
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".hg") return FileFormat::HgText;
  if (ext == ".json") return FileFormat::HgJson;
  if (ext == ".hyperedges" || ext == ".hel") return FileFormat::EdgeList;
  fail(ErrorCode::ParseError,
       path + ": cannot infer format from extension '" + ext +
           "'; pass --format");
}

IngestResult load_hypergraph(const std::string& path, FileFormat format) {
  switch (format) {
    case FileFormat::HgText: return load_hg_text(path);
    case FileFormat::HgJson: return load_hg_json(path);
    case FileFormat::EdgeList: return load_edge_list(path);
  }
  fail(ErrorCode::InternalError, "unhandled format");
}

IngestResult load_hypergraph(const std::string& path) {
  return load_hypergraph(path, detect_format(path));
}

void save_hg_text(const std::string& path, const Hypergraph& g) {
  std::ofstream out = create_or_fail(path);
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (int e = 0; e < g.num_edges(); ++e) {
    out << g.weight(e);
    for (VertexId v : g.edge(e).members) out << ' ' << v;
    out << '\n';
  }
}

void save_hg_json(const std::string& path, const Hypergraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.num_vertices();
  doc["hyperedges"] = nlohmann::ordered_json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    nlohmann::ordered_json item;
    item["w"] = g.weight(e);
    item["members"] = g.edge(e).members;
    doc["hyperedges"].push_back(std::move(item));
  }
  std::ofstream out = create_or_fail(path);
  out << doc.dump(2) << '\n';
}

Partition load_labels(const std::string& path) {
  std::ifstream in = open_or_fail(path);
  std::string line;
  int lineno = 0;
  Partition p;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    std::istringstream row(line);
    long v;
    if (!(row >> v)) parse_fail(path, lineno, "expected an integer label");
    std::string extra;
    if (row >> extra) parse_fail(path, lineno, "trailing content after label");
    p.labels.push_back(static_cast<int>(v));
  }
  if (p.labels.empty()) {
    fail(ErrorCode::ParseError, path + ": no labels found");
  }
  return p;
}

void save_labels(const std::string& path, const Partition& p) {
  std::ofstream out = create_or_fail(path);
  for (int l : p.labels) out << l << '\n';
}

void write_expansion_dot(std::ostream& os, const WeightedGraph& wg) {
  os.precision(std::numeric_limits<double>::max_digits10);
  os << "graph clique_expansion {\n";
  for (const auto& e : wg.edges) {
    os << "  " << e.u << " -- " << e.v << " [weight=" << e.w << "];\n";
  }
  os << "}\n";
}

void write_expansion_csv(std::ostream& os, const WeightedGraph& wg) {
  os.precision(std::numeric_limits<double>::max_digits10);
  os << "u,v,weight\n";
  for (const auto& e : wg.edges) {
    os << e.u << ',' << e.v << ',' << e.w << '\n';
  }
}

}  // namespace hyperrcd
