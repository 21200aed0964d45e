#include "doctest.h"

#include "nkayles/errors.hpp"
#include "nkayles/generators.hpp"
#include "nkayles/kernel.hpp"
#include "nkayles/nimber.hpp"
#include "nkayles/structure.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace nkayles;

namespace {

Graph star_with_leaves(std::size_t m) { return generate(CompleteMultipartite{{1, m}}); }

Nimber N(std::uint32_t v) { return Nimber(v); }

void check_trace(const Graph& g, const Kernel& k) {
  VertexSet removed;
  for (const ReductionStep& s : k.trace.steps) {
    CHECK_FALSE(s.removed.intersects(removed));
    removed |= s.removed;
    CHECK(s.survivors.is_subset_of(s.members));
    CHECK((s.survivors | s.removed) == s.members);
    if (s.kind == ModuleKind::clique) {
      CHECK(s.survivors.size() == 1);
    } else {
      CHECK((s.survivors.size() == 1 || s.survivors.size() == 2));
      CHECK(parity(s.survivors.size()) == parity(s.members.size()));
    }
  }
  // Replaying the removals reproduces the kernel.
  const auto replay = induced_subgraph(g, g.vertices() - removed);
  CHECK(replay.graph == k.graph);
  CHECK(replay.to_parent == k.to_original);
}

}  // namespace

TEST_CASE("parity") {
  CHECK(parity(0) == 0);
  CHECK(parity(1) == 1);
  CHECK(parity(4) == 0);
  static_assert(parity(7) == 1);
}

TEST_CASE("reduce_clique_module") {
  const Graph k5 = generate(Complete{5});
  const auto r = reduce_clique_module(k5, k5.vertices());
  CHECK(r.graph.size() == 1);
  CHECK(r.to_parent == std::vector<Vertex>{0});
  CHECK(nimber_bruteforce(k5) == N(1));
  CHECK(nimber_bruteforce(r.graph) == N(1));

  const Graph k2 = generate(Complete{2});
  CHECK(reduce_clique_module(k2, k2.vertices()).graph.size() == 1);

  // K_{2,3} with the two-vertex side turned into a clique.
  const Graph g = generate(Blowup{generate(Complete{2}), {2, 3},
                                  {ModuleKind::clique, ModuleKind::independent}});
  const auto reduced = reduce_clique_module(g, VertexSet{0, 1});
  CHECK(reduced.graph == star_with_leaves(3));
  CHECK(nimber_bruteforce(reduced.graph) == nimber_bruteforce(g));

  CHECK_THROWS_AS(reduce_clique_module(g, VertexSet{2, 3}), ContractViolation);
  CHECK_THROWS_AS(reduce_clique_module(g, VertexSet{0}), ContractViolation);
  CHECK_THROWS_AS(reduce_clique_module(generate(Path{3}), VertexSet{0, 1}), ContractViolation);
}

TEST_CASE("reduce_independent_module") {
  const Graph k14 = star_with_leaves(4);
  const auto r4 = reduce_independent_module(k14, VertexSet{1, 2, 3, 4});
  CHECK(r4.graph == star_with_leaves(2));
  CHECK(nimber_bruteforce(k14) == N(2));
  CHECK(nimber_bruteforce(r4.graph) == N(2));

  const Graph k13 = star_with_leaves(3);
  const auto r3 = reduce_independent_module(k13, VertexSet{1, 2, 3});
  CHECK(r3.graph == generate(Complete{2}));
  CHECK(nimber_bruteforce(k13) == N(1));
  CHECK(nimber_bruteforce(r3.graph) == N(1));

  const Graph five(5, std::initializer_list<Edge>{});
  const auto r5 = reduce_independent_module(five, five.vertices());
  CHECK(r5.graph.size() == 1);
  CHECK(nimber_bruteforce(five) == N(parity(5)));

  CHECK_THROWS_AS(reduce_independent_module(k14, VertexSet{1, 2}), ContractViolation);
  CHECK_THROWS_AS(reduce_independent_module(k14, VertexSet{0, 1, 2}), ContractViolation);
}

TEST_CASE("the keep-two rule breaks on odd classes") {
  // Keeping two of three leaves turns K_{1,3} (nim 1) into P3 (nim 2).
  const Graph k13 = star_with_leaves(3);
  CHECK(testing::keep_two_kernel(k13) == star_with_leaves(2));
  CHECK(nimber_bruteforce(testing::keep_two_kernel(k13)) == N(2));
  CHECK(nimber_bruteforce(kernelize(k13).graph) == N(1));
}

TEST_CASE("kernelize examples") {
  const Graph k333 = generate(CompleteMultipartite{{3, 3, 3}});
  const Kernel a = kernelize(k333);
  CHECK(a.graph == generate(Complete{3}));
  CHECK(nimber_bruteforce(k333) == N(1));
  CHECK(nimber_bruteforce(a.graph) == N(1));

  const Graph p3 = generate(Path{3});
  const Kernel b = kernelize(p3);
  CHECK(b.graph == p3);
  CHECK(b.trace.steps.empty());

  const Kernel c = kernelize(star_with_leaves(5));
  CHECK(c.graph == generate(Complete{2}));
  CHECK(nimber_bruteforce(star_with_leaves(5)) == N(1));

  const Kernel d = kernelize(generate(CompleteMultipartite{{5, 5, 5}}));
  CHECK(d.graph.size() == 3);

  const Kernel e = kernelize(generate(Path{4}));
  CHECK(e.graph.size() == 4);
}

TEST_CASE("kernel preserves nimbers and respects the size bound") {
  auto check = [](const Graph& g) {
    const Kernel k = kernelize(g);
    REQUIRE(nimber_bruteforce(k.graph) == nimber_bruteforce(g));
    REQUIRE(k.graph.size() <= 2 * neighborhood_diversity(g));
    check_trace(g, k);
  };
  for (const auto& c : testing::gnp_corpus(300)) check(c.graph);
  for (const auto& c : testing::multipartite_corpus()) check(c.graph);
  for (const auto& c : testing::blowup_corpus(200, 11)) check(c.graph);
  for (std::size_t m = 2; m <= 6; ++m) check(star_with_leaves(m));
}

TEST_CASE("parity law for independent modules") {
  // nim(G - N[v]) = nim(G - (N[v] + M)) xor p(|M| - 1) for v in an independent module M.
  for (const auto& c : testing::blowup_corpus(120, 5)) {
    const Graph& g = c.graph;
    if (g.size() > 12) continue;
    for (const NDClass& cls : nd_partition(g).classes) {
      if (cls.kind != ModuleKind::independent) continue;
      for (Vertex v : cls.members) {
        const VertexSet after = g.vertices() - g.closed_neighbors(v);
        const Nimber lhs = nimber_bruteforce(induced_subgraph(g, after).graph);
        const Nimber rest = nimber_bruteforce(induced_subgraph(g, after - cls.members).graph);
        CHECK(lhs == (rest ^ N(parity(cls.members.size() - 1))));
      }
    }
  }
}

TEST_CASE("single pass is not idempotent; the fixpoint is") {
  const Graph k13 = star_with_leaves(3);
  const Kernel once = kernelize(k13);
  CHECK(once.graph.size() == 2);
  CHECK(kernelize(once.graph).graph.size() == 1);

  const Kernel fix = kernelize_to_fixpoint(k13);
  CHECK(fix.graph.size() == 1);
  CHECK(kernelize(fix.graph).graph == fix.graph);

  for (const auto& c : testing::gnp_corpus(300)) {
    const Kernel k = kernelize_to_fixpoint(c.graph);
    CHECK(kernelize(k.graph).trace.steps.empty());
    CHECK(kernelize_to_fixpoint(k.graph).graph == k.graph);
    CHECK(k.graph.size() <= kernelize(c.graph).graph.size());
    CHECK(nimber(k.graph) == nimber(c.graph));
    check_trace(c.graph, k);
  }
}
