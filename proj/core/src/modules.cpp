#include <algorithm>
#include <string>

#include "nkayles/errors.hpp"
#include "nkayles/structure.hpp"

namespace nkayles {

bool is_module(const Graph& g, VertexSet s) {
  require_subset(g, s, "is_module");
  for (Vertex v : g.vertices() - s) {
    const VertexSet seen = g.neighbors(v) & s;
    if (!seen.empty() && seen != s) return false;
  }
  return true;
}

VertexSet smallest_module_containing(const Graph& g, VertexSet seed) {
  require_subset(g, seed, "smallest_module_containing");
  VertexSet m = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex z : g.vertices() - m) {
      const VertexSet seen = g.neighbors(z) & m;
      if (!seen.empty() && seen != m) {
        m.insert(z);
        grew = true;
      }
    }
  }
  return m;
}

std::vector<VertexSet> maximal_modules_partition(const Graph& g) {
  if (g.size() < 2) throw ContractViolation("maximal_modules_partition: needs at least two vertices");
  if (auto comps = connected_components(g); comps.size() > 1) return comps;
  if (auto co = connected_components(complement(g)); co.size() > 1) return co;

  // G and its complement are connected: the maximal proper modules are
  // disjoint, and u shares one with v iff the module spanned by {u, v} is proper.
  const VertexSet all = g.vertices();
  std::vector<VertexSet> parts;
  VertexSet assigned;
  for (Vertex v : all) {
    if (assigned.contains(v)) continue;
    VertexSet part = VertexSet::single(v);
    for (Vertex u : all - assigned - part) {
      if (smallest_module_containing(g, VertexSet{u, v}) != all) part.insert(u);
    }
    parts.push_back(part);
    assigned |= part;
  }
  return parts;
}

std::string_view to_string(MDKind k) {
  switch (k) {
    case MDKind::leaf: return "leaf";
    case MDKind::series: return "series";
    case MDKind::parallel: return "parallel";
    case MDKind::prime: return "prime";
  }
  return "unknown";
}

namespace {

MDNode decompose(const Graph& g, VertexSet span) {
  MDNode node;
  node.span = span;
  if (span.size() == 1) {
    node.kind = MDKind::leaf;
    node.vertex = span.front();
    return node;
  }
  const InducedSubgraph sub = induced_subgraph(g, span);
  if (connected_components(sub.graph).size() > 1) {
    node.kind = MDKind::parallel;
  } else if (connected_components(complement(sub.graph)).size() > 1) {
    node.kind = MDKind::series;
  } else {
    node.kind = MDKind::prime;
  }
  for (VertexSet part : maximal_modules_partition(sub.graph)) {
    node.children.push_back(decompose(g, sub.lift(part)));
  }
  return node;
}

std::size_t widest_prime(const MDNode& node) {
  std::size_t best = node.kind == MDKind::prime ? node.children.size() : 0;
  for (const MDNode& child : node.children) best = std::max(best, widest_prime(child));
  return best;
}

}  // namespace

MDNode modular_decomposition(const Graph& g) {
  if (g.empty()) throw ContractViolation("modular_decomposition: empty graph");
  return decompose(g, g.vertices());
}

std::size_t modular_width(const Graph& g) {
  if (g.size() <= 1) return g.size();
  return std::max<std::size_t>(2, widest_prime(modular_decomposition(g)));
}

void require_partition(const Graph& g, std::span<const VertexSet> parts) {
  VertexSet covered;
  for (VertexSet p : parts) {
    if (p.empty()) throw ContractViolation("partition has an empty class");
    if (p.intersects(covered)) throw ContractViolation("partition classes overlap");
    covered |= p;
  }
  if (covered != g.vertices()) throw ContractViolation("partition does not cover V(G)");
}

Graph quotient_graph(const Graph& g, std::span<const VertexSet> partition) {
  require_partition(g, partition);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < partition.size(); ++i) {
    if (!is_module(g, partition[i])) {
      throw ContractViolation("quotient_graph: class " + std::to_string(i) + " is not a module");
    }
    const VertexSet reach = closed_neighborhood(g, VertexSet::single(partition[i].front()));
    for (Vertex j = i + 1; j < partition.size(); ++j) {
      if (partition[j].is_subset_of(reach)) {
        edges.emplace_back(i, j);
      } else if (partition[j].intersects(reach)) {
        throw ContractViolation("quotient_graph: mixed adjacency between classes");
      }
    }
  }
  return Graph(partition.size(), edges);
}

}  // namespace nkayles
