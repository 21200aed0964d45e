#include "nkayles/nimber.hpp"

#include <algorithm>
#include <bitset>
#include <string>

#include "nkayles/errors.hpp"

namespace nkayles {

Nimber mex(std::span<const Nimber> values) {
  // At most |values| entries can be occupied below |values|.
  std::vector<bool> seen(values.size() + 1, false);
  for (Nimber v : values) {
    if (v.value() < seen.size()) seen[v.value()] = true;
  }
  const auto it = std::find(seen.begin(), seen.end(), false);
  return Nimber(static_cast<std::uint32_t>(it - seen.begin()));
}

Nimber nim_sum(std::span<const Nimber> values) {
  Nimber acc;
  for (Nimber v : values) acc ^= v;
  return acc;
}

std::optional<Nimber> MemoTable::find(VertexSet key) {
  const auto it = table_.find(key);
  if (it == table_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void MemoTable::insert(VertexSet key, Nimber value) {
  if (base_ && !is_connected(*base_, key)) {
    throw InternalError("memo key is not a connected nonempty position");
  }
  const auto [it, inserted] = table_.emplace(key, value);
  if (!inserted && it->second != value) {
    throw InternalError("memo idempotency violated for key " + std::to_string(key.bits()));
  }
}

void MemoTable::bind(const Graph& g) {
  if (!base_) {
    base_ = g;
  } else if (*base_ != g) {
    throw ContractViolation("memo table is bound to a different graph");
  }
}

std::vector<VertexSet> MemoTable::keys() const {
  std::vector<VertexSet> out;
  out.reserve(table_.size());
  for (const auto& [key, value] : table_) out.push_back(key);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_cap(const Graph& g, std::size_t cap, const char* who) {
  if (g.size() > cap) {
    throw CapExceeded(std::string(who) + ": " + std::to_string(g.size()) +
                      " vertices exceed the cap of " + std::to_string(cap));
  }
}

// Values are bounded by the position size, so a fixed-width mask suffices.
using MexMask = std::bitset<kMaxVertices + 2>;

Nimber mask_mex(const MexMask& seen) {
  std::size_t k = 0;
  while (seen.test(k)) ++k;
  return Nimber(static_cast<std::uint32_t>(k));
}

class Evaluator {
public:
  Evaluator(const Graph& g, MemoTable& memo) : g_(g), memo_(memo) {}

  Nimber position(VertexSet alive) {
    if (alive.empty()) return Nimber(0);
    Nimber acc;
    VertexSet rest = alive;
    while (!rest.empty()) {
      const VertexSet comp = component_of(g_, alive, rest.front());
      acc ^= connected(comp);
      rest -= comp;
    }
    return acc;
  }

private:
  Nimber connected(VertexSet comp) {
    if (auto cached = memo_.find(comp)) return *cached;
    MexMask seen;
    for (Vertex v : comp) seen.set(position(comp - g_.closed_neighbors(v)).value());
    const Nimber result = mask_mex(seen);
    memo_.insert(comp, result);
    return result;
  }

  const Graph& g_;
  MemoTable& memo_;
};

class BruteForce {
public:
  explicit BruteForce(const Graph& g) : g_(g) {}

  Nimber position(VertexSet alive) {
    if (alive.empty()) return Nimber(0);
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
    MexMask seen;
    for (Vertex v : alive) seen.set(position(alive - g_.closed_neighbors(v)).value());
    const Nimber result = mask_mex(seen);
    memo_.emplace(alive, result);
    return result;
  }

private:
  const Graph& g_;
  std::unordered_map<VertexSet, Nimber> memo_;
};

}  // namespace

Nimber nimber_of_position(const Graph& g, VertexSet alive, MemoTable& memo,
                          const EngineOptions& options) {
  require_cap(g, options.max_vertices, "nimber");
  require_subset(g, alive, "nimber");
  memo.bind(g);
  return Evaluator(g, memo).position(alive);
}

Nimber nimber(const Graph& g, MemoTable& memo, const EngineOptions& options) {
  return nimber_of_position(g, g.vertices(), memo, options);
}

Nimber nimber(const Graph& g, const EngineOptions& options) {
  MemoTable memo;
  return nimber(g, memo, options);
}

Nimber nimber_bruteforce(const Graph& g, std::size_t max_vertices) {
  require_cap(g, max_vertices, "nimber_bruteforce");
  return BruteForce(g).position(g.vertices());
}

bool first_player_wins(const Graph& g, const EngineOptions& options) {
  return nimber(g, options) > Nimber(0);
}

std::optional<Vertex> optimal_move(const Graph& g, MemoTable& memo,
                                   const EngineOptions& options) {
  if (nimber(g, memo, options) == Nimber(0)) return std::nullopt;
  for (Vertex v : g.vertices()) {
    if (nimber_of_position(g, g.vertices() - g.closed_neighbors(v), memo, options) == Nimber(0)) {
      return v;
    }
  }
  throw InternalError("nonzero nimber without a move to a zero position");
}

std::optional<Vertex> optimal_move(const Graph& g, const EngineOptions& options) {
  MemoTable memo;
  return optimal_move(g, memo, options);
}

}  // namespace nkayles
