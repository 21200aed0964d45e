#pragma once

#include <cstddef>
#include <vector>

#include "nkayles/graph.hpp"

namespace nkayles {

/// k mod 2.
constexpr unsigned parity(std::size_t k) { return static_cast<unsigned>(k & 1U); }

/// One class reduction, in ids of the graph passed to kernelize.
struct ReductionStep {
  VertexSet members;
  ModuleKind kind = ModuleKind::independent;
  VertexSet survivors;
  VertexSet removed;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;

  /// Union of the removed sets of all steps.
  VertexSet removed() const;
};

/// Replaces the clique module `m` (|m| >= 2) by its smallest member.
InducedSubgraph reduce_clique_module(const Graph& g, VertexSet m);

/// Shrinks the independent module `m` (|m| >= 3) to its smallest member if
/// |m| is odd and its two smallest members if |m| is even. An even number of
/// vertices is removed, so the parity of |m| and the nimber are preserved.
InducedSubgraph reduce_independent_module(const Graph& g, VertexSet m);

struct Kernel {
  Graph graph;
  /// Kernel vertex i is vertex to_original[i] of the input.
  std::vector<Vertex> to_original;
  ReductionTrace trace;
};

/// One pass over the twin classes: clique classes of size >= 2 collapse to one
/// vertex, independent classes of size >= 3 keep one or two vertices. The
/// kernel has the input's nimber and at most 2 * nd(G) vertices.
Kernel kernelize(const Graph& g);

/// Repeats kernelize until no class reduces. Survivors of one pass can
/// become twins in the next (K_{1,3} -> K2 -> K1), so a single pass is not
/// idempotent; this variant is.
Kernel kernelize_to_fixpoint(const Graph& g);

}  // namespace nkayles
