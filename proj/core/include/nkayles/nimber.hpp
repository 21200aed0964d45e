#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "nkayles/graph.hpp"

namespace nkayles {

/// Grundy value of a Node Kayles position.
class Nimber {
public:
  constexpr Nimber() = default;
  constexpr explicit Nimber(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }

  /// Nim-sum of two independent games.
  friend constexpr Nimber operator^(Nimber a, Nimber b) { return Nimber(a.value_ ^ b.value_); }
  constexpr Nimber& operator^=(Nimber o) {
    value_ ^= o.value_;
    return *this;
  }
  constexpr auto operator<=>(const Nimber&) const = default;

private:
  std::uint32_t value_ = 0;
};

/// Minimum excludant: the smallest non-negative value absent from `values`.
Nimber mex(std::span<const Nimber> values);
/// XOR-fold; 0 for the empty list.
Nimber nim_sum(std::span<const Nimber> values);

/// Memo of connected positions of one base graph, keyed by the alive set.
///
/// A table is bound to the first graph it is used with; reusing it on a
/// different graph is a ContractViolation. Every stored key induces a
/// connected nonempty subgraph of the base graph.
class MemoTable {
public:
  struct Stats {
    std::size_t entries = 0;
    std::size_t hits = 0;
    std::size_t misses = 0;
  };

  std::optional<Nimber> find(VertexSet key);
  /// Re-inserting a key with a different value throws InternalError.
  void insert(VertexSet key, Nimber value);

  void bind(const Graph& g);
  bool bound() const { return base_.has_value(); }

  std::size_t size() const { return table_.size(); }
  Stats stats() const { return {table_.size(), hits_, misses_}; }
  /// Stored keys in ascending order.
  std::vector<VertexSet> keys() const;

private:
  std::optional<Graph> base_;
  std::unordered_map<VertexSet, Nimber> table_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

struct EngineOptions {
  /// Inputs with more vertices are refused with CapExceeded.
  std::size_t max_vertices = kMaxVertices;
};

/// Default cap of the decomposition-free oracle.
inline constexpr std::size_t kOracleMaxVertices = 20;

/// nim(G) by the component-splitting memoized recursion: the empty position
/// is 0, a disconnected position is the nim-sum of its components, and a
/// connected position is the mex over moves v of nim(G - N[v]). Only
/// connected positions are stored in `memo`.
Nimber nimber(const Graph& g, MemoTable& memo, const EngineOptions& options = {});
Nimber nimber(const Graph& g, const EngineOptions& options = {});

/// nim of the position G[alive] of the base graph, sharing `memo`.
Nimber nimber_of_position(const Graph& g, VertexSet alive, MemoTable& memo,
                          const EngineOptions& options = {});

/// Independent oracle: plain mex recursion over raw alive sets with no
/// component splitting.
Nimber nimber_bruteforce(const Graph& g, std::size_t max_vertices = kOracleMaxVertices);

/// True iff the player to move wins, i.e. nim(G) > 0.
bool first_player_wins(const Graph& g, const EngineOptions& options = {});

/// Smallest v whose move leaves a position of nimber 0; none if nim(G) = 0.
std::optional<Vertex> optimal_move(const Graph& g, const EngineOptions& options = {});
std::optional<Vertex> optimal_move(const Graph& g, MemoTable& memo,
                                   const EngineOptions& options = {});

}  // namespace nkayles
