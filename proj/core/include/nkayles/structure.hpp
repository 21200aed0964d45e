#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "nkayles/graph.hpp"

namespace nkayles {

// ---------------------------------------------------------------------------
// Modules and modular decomposition

/// Every vertex outside `s` sees all of `s` or none of it.
bool is_module(const Graph& g, VertexSet s);

/// Inclusion-minimal module containing `seed`, grown by absorbing splitters.
VertexSet smallest_module_containing(const Graph& g, VertexSet seed);

/// Top-level split of a graph with at least two vertices: the connected
/// components if G is disconnected, the co-components if its complement is,
/// and otherwise the maximal strong modules. Ordered by smallest member.
std::vector<VertexSet> maximal_modules_partition(const Graph& g);

enum class MDKind { leaf, series, parallel, prime };
std::string_view to_string(MDKind k);

/// Node of a modular decomposition tree. `span` holds the leaves below it
/// (ids of the decomposed graph); `vertex` is meaningful for leaves only.
struct MDNode {
  MDKind kind = MDKind::leaf;
  Vertex vertex = 0;
  VertexSet span;
  std::vector<MDNode> children;
};

/// Requires at least one vertex.
MDNode modular_decomposition(const Graph& g);

/// 0 for the empty graph, 1 for a single vertex, otherwise the larger of 2
/// and the widest prime node of the decomposition tree.
std::size_t modular_width(const Graph& g);

/// Requires `partition` to partition V(G) into modules; vertex i of the
/// result stands for partition[i].
Graph quotient_graph(const Graph& g, std::span<const VertexSet> partition);

/// Throws ContractViolation unless `parts` are nonempty, disjoint and cover V(G).
void require_partition(const Graph& g, std::span<const VertexSet> parts);

// ---------------------------------------------------------------------------
// Neighbourhood diversity

struct NDClass {
  VertexSet members;
  /// Singletons are labelled independent.
  ModuleKind kind = ModuleKind::independent;
};

struct NDPartition {
  /// Ordered by smallest member.
  std::vector<NDClass> classes;

  std::size_t size() const { return classes.size(); }
};

/// Twin classes under u ~ v iff N(u) - {v} = N(v) - {u}.
NDPartition nd_partition(const Graph& g);
std::size_t neighborhood_diversity(const Graph& g);

// ---------------------------------------------------------------------------
// Vertex cover

inline constexpr std::size_t kVertexCoverMaxVertices = 40;

bool is_vertex_cover(const Graph& g, VertexSet c);

/// A minimum vertex cover; among those, the one whose ascending member list
/// is lexicographically smallest.
VertexSet minimum_vertex_cover(const Graph& g, std::size_t max_vertices = kVertexCoverMaxVertices);

}  // namespace nkayles
