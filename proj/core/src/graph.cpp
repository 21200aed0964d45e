#include "nkayles/graph.hpp"

#include <string>

#include "nkayles/errors.hpp"

namespace nkayles {

namespace {

void require_cap(std::size_t n) {
  if (n > kMaxVertices) {
    throw CapExceeded("graph has " + std::to_string(n) + " vertices; at most " +
                      std::to_string(kMaxVertices) + " are supported");
  }
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  require_cap(n);
  adjacency_.assign(n, VertexSet{});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ContractViolation("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} out of range for n=" + std::to_string(n));
    }
    if (u == v) throw ContractViolation("self-loop at vertex " + std::to_string(u));
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
  }
}

Graph Graph::from_adjacency(std::vector<VertexSet> adjacency) {
  const std::size_t n = adjacency.size();
  require_cap(n);
  const VertexSet all = VertexSet::range(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!adjacency[v].is_subset_of(all)) throw ContractViolation("neighbour out of range");
    if (adjacency[v].contains(v)) throw ContractViolation("self-loop at vertex " + std::to_string(v));
    for (Vertex u : adjacency[v]) {
      if (!adjacency[u].contains(v)) throw ContractViolation("adjacency is not symmetric");
    }
  }
  return Graph(std::move(adjacency));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet s : adjacency_) twice += s.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet InducedSubgraph::lift(VertexSet s) const {
  VertexSet out;
  for (Vertex v : s) out.insert(to_parent.at(v));
  return out;
}

void require_subset(const Graph& g, VertexSet s, const char* what) {
  if (!g.contains(s)) {
    throw ContractViolation(std::string(what) + ": vertex set is not a subset of V(G) (n=" +
                            std::to_string(g.size()) + ")");
  }
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  require_subset(g, s, "induced_subgraph");
  std::vector<Vertex> to_parent = s.to_vector();
  std::vector<Vertex> to_child(g.size(), 0);
  for (Vertex i = 0; i < to_parent.size(); ++i) to_child[to_parent[i]] = i;

  std::vector<VertexSet> adjacency(to_parent.size());
  for (Vertex i = 0; i < to_parent.size(); ++i) {
    for (Vertex u : g.neighbors(to_parent[i]) & s) adjacency[i].insert(to_child[u]);
  }
  return {Graph::from_adjacency(std::move(adjacency)), std::move(to_parent)};
}

VertexSet open_neighborhood(const Graph& g, VertexSet s) {
  return closed_neighborhood(g, s) - s;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  require_subset(g, s, "closed_neighborhood");
  VertexSet out = s;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

VertexSet component_of(const Graph& g, VertexSet alive, Vertex seed) {
  VertexSet reached = VertexSet::single(seed);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= alive;
    next -= reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet alive) {
  std::vector<VertexSet> out;
  VertexSet rest = alive;
  while (!rest.empty()) {
    VertexSet comp = component_of(g, alive, rest.front());
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, g.vertices());
}

bool is_connected(const Graph& g, VertexSet s) {
  return !s.empty() && component_of(g, s, s.front()) == s;
}

bool is_independent_set(const Graph& g, VertexSet s) {
  require_subset(g, s, "is_independent_set");
  for (Vertex v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

bool is_clique(const Graph& g, VertexSet s) {
  require_subset(g, s, "is_clique");
  for (Vertex v : s) {
    if (!(s - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

Graph complement(const Graph& g) {
  std::vector<VertexSet> adjacency(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    adjacency[v] = g.vertices() - g.closed_neighbors(v);
  }
  return Graph::from_adjacency(std::move(adjacency));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto shift = static_cast<Vertex>(a.size());
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(a.size() + b.size(), edges);
}

bool is_forest(const Graph& g) {
  return g.edge_count() + connected_components(g).size() == g.size();
}

}  // namespace nkayles
