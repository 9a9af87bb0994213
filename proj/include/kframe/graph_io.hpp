#pragma once

#include "kframe/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace kframe::io {

/// Parses one graph6 line (an optional ">>graph6<<" header is accepted).
/// Vertices are 0..n-1, edge ids 0..m-1 in column-major upper-triangle order.
Multigraph parse_graph6(std::string_view line);

/// Parses one sparse6 line (leading ':'); loops and parallel edges survive.
Multigraph parse_sparse6(std::string_view line);

/// Dispatches on the leading ':' to sparse6, otherwise graph6.
Multigraph parse_graph6_or_sparse6(std::string_view line);

/// Encodes a simple graph whose vertex ids are exactly 0..n-1.
std::string to_graph6(const Multigraph &g);

/// {"vertices":[...], "edges":[[id,a,b],...]}
nlohmann::json to_json(const Multigraph &g);
Multigraph multigraph_from_json(const nlohmann::json &j);

enum class GraphFormat { Graph6, Json, Auto };

struct NamedGraph {
    std::string name;
    Multigraph graph;
};

/// Reads every graph in a file: one per non-empty line for graph6/sparse6,
/// a single object (or an array of objects) for JSON. Auto picks JSON for a
/// ".json" extension and graph6/sparse6 otherwise.
std::vector<NamedGraph> read_graph_file(const std::filesystem::path &path, GraphFormat format = GraphFormat::Auto);

nlohmann::json read_json_file(const std::filesystem::path &path);
void write_json_file(const std::filesystem::path &path, const nlohmann::json &j);

} // namespace kframe::io
