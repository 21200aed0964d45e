#include "nkayles/kernel.hpp"

#include "nkayles/errors.hpp"
#include "nkayles/structure.hpp"

namespace nkayles {

namespace {

VertexSet smallest(VertexSet s, std::size_t count) {
  VertexSet out;
  for (Vertex v : s) {
    if (out.size() == count) break;
    out.insert(v);
  }
  return out;
}

std::size_t independent_survivors(std::size_t size) { return parity(size) == 1 ? 1 : 2; }

}  // namespace

VertexSet ReductionTrace::removed() const {
  VertexSet out;
  for (const ReductionStep& s : steps) out |= s.removed;
  return out;
}

InducedSubgraph reduce_clique_module(const Graph& g, VertexSet m) {
  require_subset(g, m, "reduce_clique_module");
  if (m.size() < 2 || !is_clique(g, m) || !is_module(g, m)) {
    throw ContractViolation("reduce_clique_module: not a clique module of size >= 2");
  }
  return induced_subgraph(g, g.vertices() - (m - smallest(m, 1)));
}

InducedSubgraph reduce_independent_module(const Graph& g, VertexSet m) {
  require_subset(g, m, "reduce_independent_module");
  if (m.size() < 3 || !is_independent_set(g, m) || !is_module(g, m)) {
    throw ContractViolation("reduce_independent_module: not an independent module of size >= 3");
  }
  return induced_subgraph(g, g.vertices() - (m - smallest(m, independent_survivors(m.size()))));
}

Kernel kernelize(const Graph& g) {
  const NDPartition nd = nd_partition(g);
  ReductionTrace trace;
  for (ModuleKind pass : {ModuleKind::clique, ModuleKind::independent}) {
    for (const NDClass& c : nd.classes) {
      if (c.kind != pass) continue;
      const std::size_t keep =
          pass == ModuleKind::clique ? 1 : independent_survivors(c.members.size());
      if (c.members.size() <= keep) continue;
      const VertexSet survivors = smallest(c.members, keep);
      trace.steps.push_back({c.members, c.kind, survivors, c.members - survivors});
    }
  }
  InducedSubgraph sub = induced_subgraph(g, g.vertices() - trace.removed());
  return {std::move(sub.graph), std::move(sub.to_parent), std::move(trace)};
}

Kernel kernelize_to_fixpoint(const Graph& g) {
  Kernel acc{g, VertexSet::range(g.size()).to_vector(), {}};
  while (true) {
    Kernel next = kernelize(acc.graph);
    if (next.trace.steps.empty()) return acc;
    auto to_original = [&](VertexSet s) {
      VertexSet out;
      for (Vertex v : s) out.insert(acc.to_original[v]);
      return out;
    };
    for (const ReductionStep& s : next.trace.steps) {
      acc.trace.steps.push_back(
          {to_original(s.members), s.kind, to_original(s.survivors), to_original(s.removed)});
    }
    std::vector<Vertex> composed;
    for (Vertex v : next.to_original) composed.push_back(acc.to_original[v]);
    acc.graph = std::move(next.graph);
    acc.to_original = std::move(composed);
  }
}

}  // namespace nkayles
