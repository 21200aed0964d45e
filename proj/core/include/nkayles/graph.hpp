#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "nkayles/vertex_set.hpp"

namespace nkayles {

using Edge = std::pair<Vertex, Vertex>;

/// Kind of a homogeneous module: its members are pairwise adjacent or pairwise not.
enum class ModuleKind { clique, independent };

/// Immutable simple undirected graph on vertices 0..n-1 (n <= kMaxVertices).
class Graph {
public:
  Graph() = default;
  /// Builds the graph on `n` vertices with the given edges. Duplicate edges
  /// collapse. Throws CapExceeded if n > kMaxVertices and ContractViolation
  /// on self-loops or out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds a graph from per-vertex neighbourhoods; validates symmetry.
  static Graph from_adjacency(std::vector<VertexSet> adjacency);

  std::size_t size() const { return adjacency_.size(); }
  bool empty() const { return adjacency_.empty(); }
  VertexSet vertices() const { return VertexSet::range(size()); }

  VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
  VertexSet closed_neighbors(Vertex v) const { return adjacency_[v] | VertexSet::single(v); }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  std::size_t edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool contains(VertexSet s) const { return s.is_subset_of(vertices()); }

  bool operator==(const Graph&) const = default;

private:
  explicit Graph(std::vector<VertexSet> adjacency) : adjacency_(std::move(adjacency)) {}

  std::vector<VertexSet> adjacency_;
};

/// An induced subgraph together with the map from its ids back to the parent.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  /// Maps a vertex set of `graph` to the corresponding set of the parent.
  VertexSet lift(VertexSet s) const;
};

/// G[s]; vertices of s are renumbered densely in ascending order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// N_G(s) = union of neighbourhoods minus s.
VertexSet open_neighborhood(const Graph& g, VertexSet s);
/// N_G[s] = union of closed neighbourhoods; empty for empty s.
VertexSet closed_neighborhood(const Graph& g, VertexSet s);

/// Connected components of G, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
/// Connected components of G[alive], ordered by smallest member.
std::vector<VertexSet> components_within(const Graph& g, VertexSet alive);
/// The component of G[alive] containing `seed` (which must lie in alive).
VertexSet component_of(const Graph& g, VertexSet alive, Vertex seed);
bool is_connected(const Graph& g, VertexSet s);

bool is_independent_set(const Graph& g, VertexSet s);
bool is_clique(const Graph& g, VertexSet s);

Graph complement(const Graph& g);
/// Vertices of `b` are shifted by |V(a)|.
Graph disjoint_union(const Graph& a, const Graph& b);
/// True iff the graph has no cycle.
bool is_forest(const Graph& g);

/// Throws ContractViolation if `s` is not a subset of V(g).
void require_subset(const Graph& g, VertexSet s, const char* what);

}  // namespace nkayles
