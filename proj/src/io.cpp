#include "permpow/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace permpow::io {

namespace {

json entry_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

BigInt entry_from_json(const json& v) {
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  if (v.is_string()) {
    try {
      return BigInt(v.get<std::string>());
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad integer string \"" + v.get<std::string>() + "\"");
    }
  }
  throw Error(Errc::ParseError, "matrix entries must be integers");
}

std::size_t index_from_json(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw Error(Errc::ParseError, std::string(what) + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw Error(Errc::ParseError, std::string("missing field \"") + name + "\"");
  }
  return doc.at(name);
}

}  // namespace

json graph_to_json(const Graph& g) {
  json matrix = json::array();
  for (std::size_t u = 0; u < g.size(); ++u) {
    json row = json::array();
    for (std::size_t v = 0; v < g.size(); ++v) row.push_back(entry_to_json(g(u, v)));
    matrix.push_back(std::move(row));
  }
  return json{{"n", g.size()}, {"matrix", std::move(matrix)}};
}

Graph graph_from_json(const json& doc) {
  const std::size_t n = index_from_json(field(doc, "n"), "\"n\"");
  const json& rows = field(doc, "matrix");
  if (!rows.is_array() || rows.size() != n) {
    throw Error(Errc::ParseError, "\"matrix\" must have n rows");
  }
  IntegerMatrix a(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    if (!rows[u].is_array() || rows[u].size() != n) {
      throw Error(Errc::ParseError, "row " + std::to_string(u) + " must have n entries");
    }
    for (std::size_t v = 0; v < n; ++v) a(u, v) = entry_from_json(rows[u][v]);
  }
  return Graph::from_adjacency(std::move(a));
}

json labeled_graph_to_json(const LabeledGraph& g) {
  json rot = json::array();
  for (const auto& q : g.quadruples()) rot.push_back({q[0], q[1], q[2], q[3]});
  return json{{"n", g.size()}, {"d", g.degree()}, {"rot", std::move(rot)}};
}

LabeledGraph labeled_graph_from_json(const json& doc) {
  const std::size_t n = index_from_json(field(doc, "n"), "\"n\"");
  const std::size_t d = index_from_json(field(doc, "d"), "\"d\"");
  const json& rot = field(doc, "rot");
  if (!rot.is_array()) throw Error(Errc::ParseError, "\"rot\" must be an array");
  std::vector<std::array<std::size_t, 4>> quads;
  quads.reserve(rot.size());
  for (const auto& entry : rot) {
    if (!entry.is_array() || entry.size() != 4) {
      throw Error(Errc::ParseError, "rotation entries are [v, h, w, k]");
    }
    quads.push_back({index_from_json(entry[0], "v"), index_from_json(entry[1], "h"),
                     index_from_json(entry[2], "w"), index_from_json(entry[3], "k")});
  }
  return LabeledGraph::from_rotation(n, d, quads);
}

json partition_to_json(const Partition& pi) { return json{{"blocks", pi.blocks()}}; }

Partition partition_from_json(const json& doc, std::size_t n) {
  const json& blocks = field(doc, "blocks");
  if (!blocks.is_array()) throw Error(Errc::ParseError, "\"blocks\" must be an array");
  std::vector<std::vector<std::size_t>> out;
  for (const auto& block : blocks) {
    if (!block.is_array()) throw Error(Errc::ParseError, "each block must be an array");
    std::vector<std::size_t> members;
    for (const auto& v : block) members.push_back(index_from_json(v, "block member"));
    out.push_back(std::move(members));
  }
  return Partition(std::move(out), n);
}

json quotient_to_json(const QuotientMatrix& q) {
  json counts = json::array();
  json normalized = json::array();
  for (std::size_t i = 0; i < q.counts.rows(); ++i) {
    json crow = json::array();
    json nrow = json::array();
    for (std::size_t j = 0; j < q.counts.cols(); ++j) {
      crow.push_back(entry_to_json(q.counts(i, j)));
      nrow.push_back(q.normalized(i, j));
    }
    counts.push_back(std::move(crow));
    normalized.push_back(std::move(nrow));
  }
  return json{{"counts", std::move(counts)}, {"sizes", q.sizes}, {"normalized", std::move(normalized)}};
}

std::string graph_to_dot(const Graph& g, std::size_t block) {
  auto name = [block](std::size_t x) {
    if (block == 0) return std::to_string(x);
    return std::to_string(x / block) + "." + std::to_string(x % block);
  };
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t x = 0; x < g.size(); ++x) {
    os << "  v" << x << " [label=\"" << name(x) << "\"];\n";
  }
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u; v < g.size(); ++v) {
      for (BigInt t = 0; t < g(u, v); ++t) os << "  v" << u << " -- v" << v << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, path.string() + ": " + e.what());
  }
}

}  // namespace permpow::io
