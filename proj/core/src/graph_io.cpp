#include "nkayles/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "nkayles/errors.hpp"

namespace nkayles {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

bool parse_index(std::string_view token, std::size_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    auto end = line.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

// graph6 packs the upper triangle column by column: x(0,1), x(0,2), x(1,2), ...
template <typename F>
void for_each_upper_pair(std::size_t n, F&& f) {
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) f(i, j);
  }
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  bool have_count = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t lineno = idx + 1;
    const std::string_view line = trim(lines[idx]);
    if (line.empty() || line.front() == '#') continue;
    const auto toks = tokens(line);
    if (!have_count) {
      if (toks.size() != 1 || !parse_index(toks[0], n)) {
        throw ParseError(lineno, "expected vertex count, got '" + std::string(line) + "'");
      }
      if (n > kMaxVertices) {
        throw CapExceeded("line " + std::to_string(lineno) + ": vertex count " +
                          std::to_string(n) + " exceeds the cap of " +
                          std::to_string(kMaxVertices));
      }
      have_count = true;
      continue;
    }
    std::size_t u = 0;
    std::size_t v = 0;
    if (toks.size() != 2 || !parse_index(toks[0], u) || !parse_index(toks[1], v)) {
      throw ParseError(lineno, "expected 'u v', got '" + std::string(line) + "'");
    }
    if (u >= n || v >= n) {
      throw ParseError(lineno, "vertex id out of range for n=" + std::to_string(n));
    }
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_count) throw ParseError(0, "missing vertex count");
  return Graph(n, edges);
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError(0, "graph6: empty record");
  for (char c : line) {
    if (c < 63 || c > 126) {
      throw ParseError(0, "graph6: character code " +
                              std::to_string(static_cast<unsigned char>(c)) +
                              " outside 63..126");
    }
  }

  std::size_t n = 0;
  std::size_t pos = 0;
  if (line[0] != 126) {
    n = static_cast<std::size_t>(line[0] - 63);
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == 126) throw ParseError(0, "graph6: n >= 258048 is not supported");
    if (line.size() < 4) throw ParseError(0, "graph6: truncated size field");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(line[k] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw CapExceeded("graph6: " + std::to_string(n) + " vertices exceed the cap of " +
                      std::to_string(kMaxVertices));
  }

  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (line.size() - pos != byte_count) {
    throw ParseError(0, "graph6: expected " + std::to_string(byte_count) +
                            " data bytes for n=" + std::to_string(n) + ", got " +
                            std::to_string(line.size() - pos));
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  auto bit_at = [&](std::size_t k) {
    const int value = line[pos + k / 6] - 63;
    return (value >> (5 - static_cast<int>(k % 6))) & 1;
  };
  for_each_upper_pair(n, [&](Vertex i, Vertex j) {
    if (bit_at(bit++)) edges.emplace_back(i, j);
  });
  for (std::size_t k = bit_count; k < byte_count * 6; ++k) {
    if (bit_at(k)) throw ParseError(0, "graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  const auto lines = split_lines(text);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    if (trim(lines[idx]).empty()) continue;
    try {
      out.push_back(parse_graph6(lines[idx]));
    } catch (const ParseError& e) {
      throw ParseError(idx + 1, e.what());
    }
  }
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.size();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  int acc = 0;
  int filled = 0;
  for_each_upper_pair(n, [&](Vertex i, Vertex j) {
    acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(63 + acc));
      acc = 0;
      filled = 0;
    }
  });
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

GraphFormat format_from_extension(const std::filesystem::path& path) {
  return path.extension() == ".g6" ? GraphFormat::graph6 : GraphFormat::edge_list;
}

std::string_view format_name(GraphFormat f) {
  return f == GraphFormat::graph6 ? "graph6" : "edge-list";
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "g6" || name == "graph6") return GraphFormat::graph6;
  if (name == "edges" || name == "edge-list" || name == "edgelist") return GraphFormat::edge_list;
  throw InvalidSpec("unknown graph format '" + std::string(name) + "'");
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  auto graphs = parse_graph6_lines(text);
  if (graphs.empty()) throw ParseError(0, "graph6: file '" + path.string() + "' has no records");
  return std::move(graphs.front());
}

std::string serialize(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
}

}  // namespace nkayles
