#include "nkayles/structure.hpp"

namespace nkayles {

namespace {

bool twins(const Graph& g, Vertex u, Vertex v) {
  return (g.neighbors(u) - VertexSet::single(v)) == (g.neighbors(v) - VertexSet::single(u));
}

}  // namespace

NDPartition nd_partition(const Graph& g) {
  NDPartition out;
  for (Vertex v : g.vertices()) {
    auto it = out.classes.begin();
    for (; it != out.classes.end(); ++it) {
      if (twins(g, it->members.front(), v)) break;
    }
    if (it == out.classes.end()) {
      out.classes.push_back({VertexSet::single(v), ModuleKind::independent});
    } else {
      // Twin classes are uniformly true twins or false twins.
      if (it->members.size() == 1 && g.adjacent(it->members.front(), v)) it->kind = ModuleKind::clique;
      it->members.insert(v);
    }
  }
  return out;
}

std::size_t neighborhood_diversity(const Graph& g) { return nd_partition(g).size(); }

}  // namespace nkayles
