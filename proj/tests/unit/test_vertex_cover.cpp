#include "doctest.h"

#include "nkayles/errors.hpp"
#include "nkayles/generators.hpp"
#include "nkayles/structure.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace nkayles;

TEST_CASE("minimum_vertex_cover examples") {
  CHECK(minimum_vertex_cover(Graph(1, std::initializer_list<Edge>{})).empty());
  CHECK(minimum_vertex_cover(generate(Complete{3})) == VertexSet{0, 1});
  CHECK(minimum_vertex_cover(generate(Spider{2})).size() == 3);
  for (std::size_t k = 2; k <= 6; ++k) CHECK(minimum_vertex_cover(generate(Spider{k})).size() == k + 1);
  CHECK(minimum_vertex_cover(generate(Path{4})) == VertexSet{0, 2});
  CHECK(minimum_vertex_cover(generate(Star{6})) == VertexSet{0});
  CHECK(minimum_vertex_cover(Graph{}).empty());
  CHECK_THROWS_AS(minimum_vertex_cover(generate(Path{41})), CapExceeded);
}

TEST_CASE("minimum_vertex_cover is minimum and lexicographically first") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : testing::all_labeled_graphs(n)) {
      const VertexSet c = minimum_vertex_cover(g);
      REQUIRE(is_vertex_cover(g, c));
      REQUIRE(c.size() == testing::vertex_cover_number_bruteforce(g));
      // Lexicographically smallest ascending member list among minimum covers.
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const VertexSet other(mask);
        if (other.size() != c.size() || !is_vertex_cover(g, other)) continue;
        REQUIRE_FALSE(other.to_vector() < c.to_vector());
      }
    }
  }
  for (const auto& c : testing::gnp_corpus(200)) {
    if (c.graph.size() > 12) continue;
    const VertexSet cover = minimum_vertex_cover(c.graph);
    CHECK(is_vertex_cover(c.graph, cover));
    if (!cover.empty()) CHECK(testing::no_cover_of_size(c.graph, cover.size() - 1));
  }
}

TEST_CASE("minimum_vertex_cover at larger sizes") {
  const Graph g = generate(Gnp{40, 0.1, 9});
  const VertexSet c = minimum_vertex_cover(g);
  CHECK(is_vertex_cover(g, c));
  const Graph grid_like = generate(Spider{13});
  CHECK(minimum_vertex_cover(grid_like).size() == 14);
}
