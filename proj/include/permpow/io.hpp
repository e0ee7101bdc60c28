#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "permpow/graph.hpp"
#include "permpow/partition.hpp"
#include "permpow/zigzag.hpp"

namespace permpow::io {

using nlohmann::json;

/// {"n": <int>, "matrix": [[<int>, ...], ...]}. Entries beyond 64 bits are
/// written as decimal strings; both forms are accepted on input.
json graph_to_json(const Graph& g);
/// Throws ParseError on malformed documents, plus the Graph validation errors.
Graph graph_from_json(const json& doc);

/// {"n": ..., "d": ..., "rot": [[v, h, w, k], ...]}.
json labeled_graph_to_json(const LabeledGraph& g);
LabeledGraph labeled_graph_from_json(const json& doc);

/// {"blocks": [[...], ...]}.
json partition_to_json(const Partition& pi);
Partition partition_from_json(const json& doc, std::size_t n);

/// {"counts": [[...]], "sizes": [...], "normalized": [[...]]}; the last field
/// is the decimal value of counts(i, j) / sqrt(c_i c_j).
json quotient_to_json(const QuotientMatrix& q);

/// Undirected Graphviz rendering: an entry a(u, v) = t becomes t parallel
/// edges and a(v, v) = t becomes t self-edges. When `block` > 0, vertex x is
/// labeled "copy.local" = "x / block . x % block".
std::string graph_to_dot(const Graph& g, std::size_t block = 0);

/// Reads and parses a JSON file; throws ParseError on I/O or syntax errors.
json read_json_file(const std::filesystem::path& path);

}  // namespace permpow::io
