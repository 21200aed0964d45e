#include <string>

#include "nkayles/errors.hpp"
#include "nkayles/structure.hpp"

namespace nkayles {

namespace {

std::size_t degree_in(const Graph& g, Vertex v, VertexSet alive) {
  return (g.neighbors(v) & alive).size();
}

// Does G[alive] have a vertex cover of at most `budget` vertices?
// Degree-0 vertices are dropped, a degree-1 vertex forces its neighbour, and
// otherwise we branch on a maximum-degree vertex v: take v, or take N(v).
bool cover_within(const Graph& g, VertexSet alive, long budget) {
  while (true) {
    if (budget < 0) return false;
    bool reduced = false;
    for (Vertex v : alive) {
      if (!alive.contains(v)) continue;
      const std::size_t d = degree_in(g, v, alive);
      if (d == 0) {
        alive.erase(v);
        reduced = true;
      } else if (d == 1) {
        const Vertex u = (g.neighbors(v) & alive).front();
        alive.erase(u);
        alive.erase(v);
        --budget;
        reduced = true;
        if (budget < 0) return false;
      }
    }
    if (!reduced) break;
  }
  if (alive.empty()) return true;
  if (budget == 0) return false;

  Vertex pick = alive.front();
  std::size_t max_degree = 0;
  std::size_t twice_edges = 0;
  for (Vertex v : alive) {
    const std::size_t d = degree_in(g, v, alive);
    twice_edges += d;
    if (d > max_degree) {
      max_degree = d;
      pick = v;
    }
  }
  // Each cover vertex removes at most max_degree edges.
  if (twice_edges / 2 > static_cast<std::size_t>(budget) * max_degree) return false;

  const VertexSet nbrs = g.neighbors(pick) & alive;
  if (cover_within(g, alive - VertexSet::single(pick), budget - 1)) return true;
  return cover_within(g, alive - nbrs - VertexSet::single(pick),
                      budget - static_cast<long>(nbrs.size()));
}

}  // namespace

bool is_vertex_cover(const Graph& g, VertexSet c) {
  require_subset(g, c, "is_vertex_cover");
  for (auto [u, v] : g.edges()) {
    if (!c.contains(u) && !c.contains(v)) return false;
  }
  return true;
}

VertexSet minimum_vertex_cover(const Graph& g, std::size_t max_vertices) {
  if (g.size() > max_vertices) {
    throw CapExceeded("minimum_vertex_cover: " + std::to_string(g.size()) +
                      " vertices exceed the cap of " + std::to_string(max_vertices));
  }
  const VertexSet all = g.vertices();
  long tau = 0;
  while (!cover_within(g, all, tau)) ++tau;

  // Greedy in ascending id order: keep v whenever some minimum cover still
  // extends the choices so far. Excluded vertices force their neighbours in.
  auto extendable = [&](VertexSet in, VertexSet out) {
    VertexSet forced = in;
    for (Vertex u : out) forced |= g.neighbors(u);
    if (forced.intersects(out)) return false;
    return cover_within(g, all - forced - out, tau - static_cast<long>(forced.size()));
  };
  VertexSet in;
  VertexSet out;
  for (Vertex v : all) {
    if (extendable(in | VertexSet::single(v), out)) {
      in.insert(v);
    } else {
      out.insert(v);
    }
  }
  if (static_cast<long>(in.size()) != tau || !is_vertex_cover(g, in)) {
    throw InternalError("minimum_vertex_cover: greedy reconstruction failed");
  }
  return in;
}

}  // namespace nkayles
