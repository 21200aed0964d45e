#pragma once

// Seeded test corpora shared by unit and acceptance tests.

#include <cstddef>
#include <string>
#include <vector>

#include "nkayles/generators.hpp"
#include "nkayles/graph.hpp"

namespace nkayles::testing {

struct CorpusGraph {
  std::string label;
  Graph graph;
};

/// 500 G(n, p) graphs: case i has n = 1 + (i / 3) % 14, p = {0.2, 0.5, 0.8}[i % 3],
/// seed = 1000 + i.
std::vector<CorpusGraph> gnp_corpus(std::size_t count = 500);

/// 100 blowups: quotient G(k, 0.5) with k <= 5, class sizes 1..3, random kinds.
struct BlowupCase {
  Blowup spec;
  Graph graph;
  std::vector<VertexSet> classes;
};
std::vector<BlowupCase> blowup_corpus(std::size_t count = 100, std::uint64_t seed = 7);

/// Complete multipartite graphs with 1..max_parts parts of size 1..max_size
/// (nondecreasing size lists).
std::vector<CorpusGraph> multipartite_corpus(std::size_t max_parts = 3, std::size_t max_size = 4);

/// Random recursive trees, tree i has n = 2 + i % 14 and seed i.
std::vector<CorpusGraph> tree_corpus(std::size_t count = 100);

}  // namespace nkayles::testing
