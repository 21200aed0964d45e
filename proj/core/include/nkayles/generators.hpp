#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nkayles/graph.hpp"

namespace nkayles {

/// Root 0 plus `legs` paths v1-v2-v3; the root is adjacent to every v1.
/// Leg i (0-based) occupies vertices 3i+1 (v1), 3i+2 (v2), 3i+3 (v3).
struct Spider { std::size_t legs; };
struct Path { std::size_t n; };
/// K_{1,n-1}: centre 0 and leaves 1..n-1.
struct Star { std::size_t n; };
struct Complete { std::size_t n; };
/// Parts are numbered consecutively in the order given.
struct CompleteMultipartite { std::vector<std::size_t> sizes; };
/// Substitutes vertex i of `base` by a clique or independent set of
/// sizes[i] vertices; substituted sets are joined iff the originals are adjacent.
struct Blowup {
  Graph base;
  std::vector<std::size_t> sizes;
  std::vector<ModuleKind> kinds;
};
/// Erdos-Renyi G(n, p) driven by std::mt19937_64(seed).
struct Gnp {
  std::size_t n;
  double p;
  std::uint64_t seed;
};
/// Random recursive tree: vertex v >= 1 attaches to an earlier vertex.
struct RandomTree {
  std::size_t n;
  std::uint64_t seed;
};

using FamilySpec = std::variant<Spider, Path, Star, Complete, CompleteMultipartite, Blowup,
                                Gnp, RandomTree>;

/// Deterministic for a fixed spec. Throws InvalidSpec on nonpositive sizes or
/// p outside [0, 1], CapExceeded beyond kMaxVertices.
///
/// Randomness: std::mt19937_64 seeded with `seed`. G(n, p) visits pairs
/// (i, j), i < j, in lexicographic order and keeps the edge iff
/// (draw >> 11) * 2^-53 < p. RandomTree attaches v to (draw mod v).
Graph generate(const FamilySpec& spec);

/// Parses "spider 3", "path 4", "star 5", "complete 4", "multipartite 3,3,3",
/// "gnp 12 0.5 7", "tree 10 3" and "blowup <graph6> 2,2,2 i,c,i".
FamilySpec parse_family(std::string_view text);
/// Canonical textual form accepted by parse_family.
std::string describe(const FamilySpec& spec);

}  // namespace nkayles
