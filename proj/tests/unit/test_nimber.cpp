#include "doctest.h"

#include <random>
#include <vector>

#include "nkayles/errors.hpp"
#include "nkayles/generators.hpp"
#include "nkayles/nimber.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace nkayles;

namespace {

Nimber N(std::uint32_t v) { return Nimber(v); }

const Graph kEmpty(0, std::initializer_list<Edge>{});
const Graph kK1(1, std::initializer_list<Edge>{});
const Graph kTwoIsolated(2, std::initializer_list<Edge>{});

}  // namespace

TEST_CASE("mex") {
  CHECK(mex({}) == N(0));
  const std::vector<Nimber> a{N(0), N(1), N(3)};
  CHECK(mex(a) == N(2));
  const std::vector<Nimber> b{N(1), N(2)};
  CHECK(mex(b) == N(0));
  const std::vector<Nimber> dup{N(0), N(0), N(1), N(1)};
  CHECK(mex(dup) == N(2));
}

TEST_CASE("nim_sum") {
  const std::vector<Nimber> a{N(1), N(1)};
  CHECK(nim_sum(a) == N(0));
  const std::vector<Nimber> b{N(1), N(2)};
  CHECK(nim_sum(b) == N(3));
  CHECK(nim_sum({}) == N(0));
}

TEST_CASE("nimber on small graphs") {
  CHECK(nimber(kEmpty) == N(0));
  CHECK(nimber(kK1) == N(1));
  CHECK(nimber(generate(Path{3})) == N(2));
  CHECK(nimber(generate(Path{4})) == N(0));
  CHECK(nimber(kTwoIsolated) == N(0));
  // Values from an independent Python mex recursion.
  const std::uint32_t paths[] = {1, 1, 2, 0, 3, 1, 1, 0, 3, 3, 2};
  for (std::size_t n = 1; n <= 11; ++n) CHECK(nimber(generate(Path{n})) == N(paths[n - 1]));
  const std::uint32_t spiders[] = {0, 1, 0, 1, 0, 1};
  for (std::size_t k = 1; k <= 6; ++k) CHECK(nimber(generate(Spider{k})) == N(spiders[k - 1]));
}

TEST_CASE("nimber_bruteforce") {
  CHECK(nimber_bruteforce(kK1) == N(1));
  CHECK(nimber_bruteforce(generate(Path{3})) == N(2));
  const Graph s2 = generate(Spider{2});
  CHECK(nimber_bruteforce(s2) == nimber(s2));
  CHECK(nimber_bruteforce(s2) == N(1));
  CHECK_THROWS_AS(nimber_bruteforce(generate(Path{21})), CapExceeded);
  CHECK_NOTHROW(nimber_bruteforce(generate(Path{21}), 21));
}

TEST_CASE("engine matches the oracle") {
  SUBCASE("all labelled graphs on 5 vertices") {
    for (const Graph& g : testing::all_labeled_graphs(5)) {
      REQUIRE(nimber(g) == nimber_bruteforce(g));
    }
  }
  SUBCASE("seeded G(n,p) up to 14 vertices") {
    for (const auto& c : testing::gnp_corpus(150)) {
      INFO(c.label);
      REQUIRE(nimber(c.graph) == nimber_bruteforce(c.graph));
    }
  }
}

TEST_CASE("nimber bounds") {
  for (const auto& c : testing::gnp_corpus(150)) {
    CHECK(nimber(c.graph).value() <= c.graph.size());
  }
}

TEST_CASE("first_player_wins") {
  CHECK_FALSE(first_player_wins(kEmpty));
  CHECK(first_player_wins(kK1));
  CHECK_FALSE(first_player_wins(generate(Path{4})));
  for (const auto& c : testing::gnp_corpus(120)) {
    if (c.graph.size() > 12) continue;
    INFO(c.label);
    CHECK(first_player_wins(c.graph) == testing::minimax_first_player_wins(c.graph));
  }
}

TEST_CASE("nim-sum law on disjoint unions") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    const Graph a = generate(Gnp{1 + rng() % 10, 0.4, rng()});
    const Graph b = generate(Gnp{1 + rng() % 10, 0.4, rng()});
    CHECK(nimber(disjoint_union(a, b)) == (nimber(a) ^ nimber(b)));
  }
}

TEST_CASE("optimal_move") {
  CHECK(optimal_move(kK1) == Vertex{0});
  CHECK(optimal_move(generate(Path{3})) == Vertex{1});
  CHECK_FALSE(optimal_move(generate(Path{4})).has_value());
  CHECK_FALSE(optimal_move(kEmpty).has_value());

  SUBCASE("soundness") {
    for (const auto& c : testing::gnp_corpus(150)) {
      const Graph& g = c.graph;
      const auto move = optimal_move(g);
      MemoTable memo;
      if (move) {
        CHECK(nimber_of_position(g, g.vertices() - g.closed_neighbors(*move), memo) == N(0));
        for (Vertex v = 0; v < *move; ++v) {
          CHECK(nimber_of_position(g, g.vertices() - g.closed_neighbors(v), memo) != N(0));
        }
      } else {
        for (Vertex v : g.vertices()) {
          CHECK(nimber_of_position(g, g.vertices() - g.closed_neighbors(v), memo) != N(0));
        }
      }
    }
  }
}

TEST_CASE("memo table") {
  const Graph g = generate(Spider{3});
  MemoTable memo;
  const Nimber first = nimber(g, memo);
  const auto stats = memo.stats();
  CHECK(stats.entries == memo.size());
  CHECK(stats.entries > 0);
  for (VertexSet key : memo.keys()) CHECK(is_connected(g, key));

  SUBCASE("shared table is reused") {
    CHECK(nimber(g, memo) == first);
    CHECK(memo.size() == stats.entries);
    CHECK(memo.stats().hits > stats.hits);
  }
  SUBCASE("bound to one graph") {
    CHECK_THROWS_AS(nimber(generate(Path{4}), memo), ContractViolation);
  }
  SUBCASE("idempotent inserts") {
    const VertexSet key = memo.keys().front();
    const Nimber value = *memo.find(key);
    CHECK_NOTHROW(memo.insert(key, value));
    CHECK_THROWS_AS(memo.insert(key, value ^ N(1)), InternalError);
  }
  SUBCASE("disconnected keys are rejected") {
    CHECK_THROWS_AS(memo.insert(VertexSet{3, 6}, N(0)), InternalError);
  }
}

TEST_CASE("engine size cap") {
  EngineOptions options;
  options.max_vertices = 5;
  CHECK_THROWS_AS(nimber(generate(Path{6}), options), CapExceeded);
  CHECK(nimber(generate(Path{5}), options) == N(3));
}
