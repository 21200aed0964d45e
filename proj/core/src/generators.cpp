#include "nkayles/generators.hpp"

#include <charconv>
#include <random>
#include <sstream>

#include "nkayles/errors.hpp"
#include "nkayles/graph_io.hpp"

namespace nkayles {

namespace {

void require_positive(std::size_t value, const char* what) {
  if (value == 0) throw InvalidSpec(std::string(what) + " must be positive");
}

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };

Graph make_spider(const Spider& s) {
  require_positive(s.legs, "spider: leg count");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < s.legs; ++i) {
    const Vertex v1 = 3 * i + 1;
    edges.emplace_back(0, v1);
    edges.emplace_back(v1, v1 + 1);
    edges.emplace_back(v1 + 1, v1 + 2);
  }
  return Graph(3 * s.legs + 1, edges);
}

Graph make_path(const Path& p) {
  require_positive(p.n, "path: vertex count");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < p.n; ++v) edges.emplace_back(v - 1, v);
  return Graph(p.n, edges);
}

Graph make_star(const Star& s) {
  require_positive(s.n, "star: vertex count");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < s.n; ++v) edges.emplace_back(0, v);
  return Graph(s.n, edges);
}

Graph make_complete(const Complete& c) {
  require_positive(c.n, "complete: vertex count");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < c.n; ++u) {
    for (Vertex v = u + 1; v < c.n; ++v) edges.emplace_back(u, v);
  }
  return Graph(c.n, edges);
}

Graph make_blowup(const Blowup& b) {
  const std::size_t k = b.base.size();
  if (b.sizes.size() != k || b.kinds.size() != k) {
    throw InvalidSpec("blowup: sizes and kinds must have one entry per base vertex");
  }
  std::vector<Vertex> first(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    require_positive(b.sizes[i], "blowup: class size");
    first[i + 1] = first[i] + static_cast<Vertex>(b.sizes[i]);
  }
  if (first[k] > kMaxVertices) {
    throw CapExceeded("blowup: " + std::to_string(first[k]) + " vertices exceed the cap");
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) {
    if (b.kinds[i] == ModuleKind::clique) {
      for (Vertex u = first[i]; u < first[i + 1]; ++u) {
        for (Vertex v = u + 1; v < first[i + 1]; ++v) edges.emplace_back(u, v);
      }
    }
    for (Vertex j : b.base.neighbors(i)) {
      if (j <= i) continue;
      for (Vertex u = first[i]; u < first[i + 1]; ++u) {
        for (Vertex v = first[j]; v < first[j + 1]; ++v) edges.emplace_back(u, v);
      }
    }
  }
  return Graph(first[k], edges);
}

Graph make_multipartite(const CompleteMultipartite& m) {
  if (m.sizes.empty()) throw InvalidSpec("multipartite: at least one part required");
  const std::size_t k = m.sizes.size();
  if (k > kMaxVertices) throw CapExceeded("multipartite: too many parts");
  std::vector<Edge> base;
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) base.emplace_back(u, v);
  }
  return make_blowup({Graph(k, base), m.sizes,
                      std::vector<ModuleKind>(k, ModuleKind::independent)});
}

Graph make_gnp(const Gnp& spec) {
  require_positive(spec.n, "gnp: vertex count");
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw InvalidSpec("gnp: p must lie in [0, 1]");
  if (spec.n > kMaxVertices) throw CapExceeded("gnp: vertex count exceeds the cap");
  std::mt19937_64 rng(spec.seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < spec.n; ++u) {
    for (Vertex v = u + 1; v < spec.n; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < spec.p) edges.emplace_back(u, v);
    }
  }
  return Graph(spec.n, edges);
}

Graph make_tree(const RandomTree& spec) {
  require_positive(spec.n, "tree: vertex count");
  if (spec.n > kMaxVertices) throw CapExceeded("tree: vertex count exceeds the cap");
  std::mt19937_64 rng(spec.seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < spec.n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), v);
  return Graph(spec.n, edges);
}

std::vector<std::string_view> words(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while ((pos = text.find_first_not_of(" \t\r\n", pos)) != std::string_view::npos) {
    auto end = text.find_first_of(" \t\r\n", pos);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

template <typename T>
T number(std::string_view token, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InvalidSpec(std::string("bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

double real(std::string_view token, const char* what) { return number<double>(token, what); }

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = s.find(',', pos);
    out.push_back(s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<std::size_t> size_list(std::string_view s) {
  std::vector<std::size_t> out;
  for (auto tok : split_commas(s)) out.push_back(number<std::size_t>(tok, "size"));
  return out;
}

template <typename T>
std::string join(const std::vector<T>& items) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) out << (i ? "," : "") << items[i];
  return out.str();
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const Spider& s) { return make_spider(s); },
                        [](const Path& p) { return make_path(p); },
                        [](const Star& s) { return make_star(s); },
                        [](const Complete& c) { return make_complete(c); },
                        [](const CompleteMultipartite& m) { return make_multipartite(m); },
                        [](const Blowup& b) { return make_blowup(b); },
                        [](const Gnp& g) { return make_gnp(g); },
                        [](const RandomTree& t) { return make_tree(t); },
                    },
                    spec);
}

FamilySpec parse_family(std::string_view text) {
  const auto w = words(text);
  if (w.empty()) throw InvalidSpec("empty family spec");
  const std::string_view name = w[0];
  auto expect = [&](std::size_t lo, std::size_t hi) {
    if (w.size() - 1 < lo || w.size() - 1 > hi) {
      throw InvalidSpec("family '" + std::string(name) + "': wrong number of arguments");
    }
  };
  if (name == "spider") {
    expect(1, 1);
    return Spider{number<std::size_t>(w[1], "leg count")};
  }
  if (name == "path") {
    expect(1, 1);
    return Path{number<std::size_t>(w[1], "vertex count")};
  }
  if (name == "star") {
    expect(1, 1);
    return Star{number<std::size_t>(w[1], "vertex count")};
  }
  if (name == "complete") {
    expect(1, 1);
    return Complete{number<std::size_t>(w[1], "vertex count")};
  }
  if (name == "multipartite") {
    expect(1, 1);
    return CompleteMultipartite{size_list(w[1])};
  }
  if (name == "gnp") {
    expect(2, 3);
    return Gnp{number<std::size_t>(w[1], "vertex count"), real(w[2], "probability"),
               w.size() > 3 ? number<std::uint64_t>(w[3], "seed") : 0};
  }
  if (name == "tree") {
    expect(1, 2);
    return RandomTree{number<std::size_t>(w[1], "vertex count"),
                      w.size() > 2 ? number<std::uint64_t>(w[2], "seed") : 0};
  }
  if (name == "blowup") {
    expect(3, 3);
    Graph base;
    try {
      base = parse_graph6(w[1]);
    } catch (const ParseError& e) {
      throw InvalidSpec(std::string("blowup: ") + e.what());
    }
    std::vector<ModuleKind> kinds;
    for (auto tok : split_commas(w[3])) {
      if (tok == "c" || tok == "clique") {
        kinds.push_back(ModuleKind::clique);
      } else if (tok == "i" || tok == "independent") {
        kinds.push_back(ModuleKind::independent);
      } else {
        throw InvalidSpec("blowup: unknown kind '" + std::string(tok) + "'");
      }
    }
    return Blowup{std::move(base), size_list(w[2]), std::move(kinds)};
  }
  throw InvalidSpec("unknown family '" + std::string(name) + "'");
}

std::string describe(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const Spider& s) { return "spider " + std::to_string(s.legs); },
          [](const Path& p) { return "path " + std::to_string(p.n); },
          [](const Star& s) { return "star " + std::to_string(s.n); },
          [](const Complete& c) { return "complete " + std::to_string(c.n); },
          [](const CompleteMultipartite& m) { return "multipartite " + join(m.sizes); },
          [](const Blowup& b) {
            std::vector<char> kinds;
            for (auto k : b.kinds) kinds.push_back(k == ModuleKind::clique ? 'c' : 'i');
            return "blowup " + to_graph6(b.base) + " " + join(b.sizes) + " " + join(kinds);
          },
          [](const Gnp& g) {
            std::ostringstream out;
            out << "gnp " << g.n << ' ' << g.p << ' ' << g.seed;
            return out.str();
          },
          [](const RandomTree& t) {
            return "tree " + std::to_string(t.n) + " " + std::to_string(t.seed);
          },
      },
      spec);
}

}  // namespace nkayles
