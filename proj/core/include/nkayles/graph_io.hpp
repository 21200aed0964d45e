#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nkayles/graph.hpp"

namespace nkayles {

enum class GraphFormat { edge_list, graph6 };

/// Edge-list text: first non-comment line is the vertex count, then one
/// "u v" pair per line. Lines starting with '#' and blank lines are ignored;
/// CRLF line endings are accepted. Duplicate edges collapse.
Graph parse_edge_list(std::string_view text);

/// One graph6 record (short form, or the "~" extended form for n >= 63).
/// An optional ">>graph6<<" header and trailing line ending are accepted.
Graph parse_graph6(std::string_view line);

/// Every nonempty line of a graph6 file.
std::vector<Graph> parse_graph6_lines(std::string_view text);

std::string to_edge_list(const Graph& g);
/// graph6 record without a trailing newline.
std::string to_graph6(const Graph& g);

/// ".g6" selects graph6; anything else is an edge list.
GraphFormat format_from_extension(const std::filesystem::path& path);
std::string_view format_name(GraphFormat f);
/// Accepts "g6", "graph6", "edges", "edge-list".
GraphFormat parse_format_name(std::string_view name);

/// Reads the first graph of a file in the given format.
Graph read_graph_file(const std::filesystem::path& path, GraphFormat format);
std::string serialize(const Graph& g, GraphFormat format);

}  // namespace nkayles
