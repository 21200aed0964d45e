#include "nkayles/kset.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <string>
#include <unordered_set>

#include "nkayles/errors.hpp"
#include "nkayles/nimber.hpp"
#include "nkayles/structure.hpp"

namespace nkayles {

namespace {

void require_cap(const Graph& g, std::size_t cap, const char* who) {
  if (g.size() > cap) {
    throw CapExceeded(std::string(who) + ": " + std::to_string(g.size()) +
                      " vertices exceed the cap of " + std::to_string(cap));
  }
}

constexpr VertexSet above(Vertex v) {
  return VertexSet(v >= 63 ? 0 : ~std::uint64_t{0} << (v + 1));
}

// Visits every independent set X of G exactly once, passing (X, N[X]).
// Candidates are the undominated vertices above the last chosen one, so a
// branch never picks a vertex adjacent to X.
template <typename Visit>
void for_each_independent_set(const Graph& g, VertexSet pool, Visit&& visit) {
  struct Walker {
    const Graph& g;
    Visit& visit;
    // Returns false to stop the walk.
    bool run(VertexSet x, VertexSet dominated, VertexSet candidates) {
      if (!visit(x, dominated)) return false;
      for (Vertex v : candidates) {
        const VertexSet closed = g.closed_neighbors(v);
        if (!run(x | VertexSet::single(v), dominated | closed, (candidates & above(v)) - closed)) {
          return false;
        }
      }
      return true;
    }
  };
  Walker{g, visit}.run(VertexSet{}, VertexSet{}, pool);
}

}  // namespace

std::string_view to_string(TripleDefect d) {
  switch (d) {
    case TripleDefect::none: return "ok";
    case TripleDefect::not_a_partition: return "not a partition of V";
    case TripleDefect::x_not_independent: return "X is not independent";
    case TripleDefect::separator_mismatch: return "separator differs from N(X)";
    case TripleDefect::w_empty: return "W is empty";
    case TripleDefect::w_disconnected: return "G[W] is disconnected";
    case TripleDefect::w_touches_x: return "an edge joins W and X";
  }
  return "unknown";
}

TripleCheck verify_kset_triple(const Graph& g, const KSetTriple& t) {
  const VertexSet all = g.vertices();
  const bool disjoint = !t.w.intersects(t.separator) && !t.w.intersects(t.x) &&
                        !t.separator.intersects(t.x);
  if (!disjoint || (t.w | t.separator | t.x) != all) return {TripleDefect::not_a_partition};
  if (!is_independent_set(g, t.x)) return {TripleDefect::x_not_independent};
  if (open_neighborhood(g, t.x) != t.separator) return {TripleDefect::separator_mismatch};
  if (t.w.empty()) return {TripleDefect::w_empty};
  for (Vertex v : t.w) {
    if (g.neighbors(v).intersects(t.x)) return {TripleDefect::w_touches_x};
  }
  if (!is_connected(g, t.w)) return {TripleDefect::w_disconnected};
  return {};
}

KSetFamily::KSetFamily(std::vector<VertexSet> sets) : sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool KSetFamily::contains(VertexSet s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

KSetFamily enumerate_ksets(const Graph& g, std::size_t max_vertices) {
  require_cap(g, max_vertices, "enumerate_ksets");
  const VertexSet all = g.vertices();
  std::unordered_set<VertexSet> found;
  // Distinct X often leave the same residual; split each residual once.
  std::unordered_set<VertexSet> residuals;
  for_each_independent_set(g, all, [&](VertexSet, VertexSet dominated) {
    const VertexSet residual = all - dominated;
    if (!residual.empty() && residuals.insert(residual).second) {
      for (VertexSet comp : components_within(g, residual)) found.insert(comp);
    }
    return true;
  });
  return KSetFamily({found.begin(), found.end()});
}

std::uint64_t count_ksets(const Graph& g, std::size_t max_vertices) {
  return enumerate_ksets(g, max_vertices).size();
}

KSetFamily ksets_via_dp(const Graph& g, std::size_t max_vertices) {
  require_cap(g, max_vertices, "ksets_via_dp");
  MemoTable memo;
  nimber(g, memo);
  return KSetFamily(memo.keys());
}

std::optional<KSetTriple> find_kset_triple(const Graph& g, VertexSet w, std::size_t max_vertices) {
  require_cap(g, max_vertices, "find_kset_triple");
  require_subset(g, w, "find_kset_triple");
  if (!is_connected(g, w)) return std::nullopt;
  const VertexSet all = g.vertices();
  const VertexSet target = all - w;
  // X avoids N[W], so N[X] never meets W; it only has to dominate V - W.
  const VertexSet pool = all - closed_neighborhood(g, w);
  std::optional<KSetTriple> out;
  for_each_independent_set(g, pool, [&](VertexSet x, VertexSet dominated) {
    if (dominated == target) {
      out = KSetTriple{w, dominated - x, x};
      return false;
    }
    return true;
  });
  return out;
}

std::vector<KSetTriple> enumerate_kset_triples(const Graph& g, std::size_t max_vertices) {
  require_cap(g, max_vertices, "enumerate_kset_triples");
  const VertexSet all = g.vertices();
  std::vector<KSetTriple> out;
  for_each_independent_set(g, all, [&](VertexSet x, VertexSet dominated) {
    const VertexSet w = all - dominated;
    if (is_connected(g, w)) out.push_back({w, dominated - x, x});
    return true;
  });
  return out;
}

std::uint64_t vc_kset_bound(std::size_t n, std::size_t tau) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t pow3 = 1;
  std::uint64_t pow2 = 1;
  for (std::size_t i = 0; i < tau; ++i) {
    if (pow3 > kMax / 3) return kMax;
    pow3 *= 3;
    pow2 *= 2;
  }
  // 3^t - 2^t >= 0 and n >= t, so no term underflows.
  const std::uint64_t rest = static_cast<std::uint64_t>(n - tau);
  const std::uint64_t diff = pow3 - pow2;
  return diff > kMax - rest ? kMax : diff + rest;
}

VcBoundReport check_vc_bound(const Graph& g) {
  VcBoundReport r;
  r.kappa = count_ksets(g);
  r.tau = minimum_vertex_cover(g).size();
  r.bound = vc_kset_bound(g.size(), r.tau);
  r.holds = r.kappa <= r.bound;
  return r;
}

TripartitionReport check_tripartition_injectivity(const Graph& g, VertexSet cover) {
  require_subset(g, cover, "check_tripartition_injectivity");
  if (!is_vertex_cover(g, cover)) throw ContractViolation("check_tripartition_injectivity: not a vertex cover");
  TripartitionReport r;
  std::map<std::array<std::uint64_t, 3>, KSetTriple> seen;
  for (const KSetTriple& t : enumerate_kset_triples(g)) {
    ++r.triples;
    if (!t.w.intersects(cover)) continue;
    ++r.checked;
    const std::array<std::uint64_t, 3> key{(t.w & cover).bits(), (t.separator & cover).bits(),
                                           (t.x & cover).bits()};
    const auto [it, inserted] = seen.emplace(key, t);
    if (!inserted && r.injective) {
      r.injective = false;
      r.collision = std::make_pair(it->second, t);
    }
  }
  return r;
}

ExpansionReport check_expansion_decomposition(const Graph& g,
                                              std::span<const VertexSet> partition) {
  require_partition(g, partition);
  for (VertexSet part : partition) {
    if (!is_module(g, part)) {
      throw ContractViolation("check_expansion_decomposition: a class is not a module");
    }
  }
  ExpansionReport r;
  const Graph quotient = quotient_graph(g, partition);

  std::unordered_set<VertexSet> explained;
  const KSetFamily quotient_sets = enumerate_ksets(quotient);
  r.kappa_quotient = quotient_sets.size();
  for (VertexSet classes : quotient_sets) {
    VertexSet expansion;
    for (Vertex i : classes) expansion |= partition[i];
    explained.insert(expansion);
  }
  for (VertexSet part : partition) {
    const InducedSubgraph sub = induced_subgraph(g, part);
    const KSetFamily part_sets = enumerate_ksets(sub.graph);
    r.kappa_parts += part_sets.size();
    for (VertexSet s : part_sets) explained.insert(sub.lift(s));
  }

  const KSetFamily graph_sets = enumerate_ksets(g);
  r.kappa_graph = graph_sets.size();
  for (VertexSet w : graph_sets) {
    if (!explained.contains(w)) {
      r.membership_holds = false;
      r.counterexample = w;
      break;
    }
  }
  r.inequality_holds = r.kappa_graph <= r.kappa_quotient + r.kappa_parts;
  return r;
}

}  // namespace nkayles
