#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace nkayles {

using Vertex = std::uint32_t;

/// Largest vertex universe representable by a VertexSet.
inline constexpr std::size_t kMaxVertices = 64;

/// A subset of the vertex universe {0, ..., 63}, stored as a single word.
///
/// Game positions, K-sets, covers and modules are all VertexSets of the
/// graph they were computed on. Iteration yields members in ascending order.
class VertexSet {
public:
  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const {
      return static_cast<Vertex>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  /// {0, ..., n-1}.
  static constexpr VertexSet range(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) {
    return VertexSet(std::uint64_t{1} << v);
  }
  template <typename Range>
  static VertexSet of(const Range& members) {
    VertexSet s;
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(Vertex v) const { return v < 64 && ((bits_ >> v) & 1U); }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex front() const { return static_cast<Vertex>(std::countr_zero(bits_)); }
  /// Largest member; undefined on the empty set.
  constexpr Vertex back() const { return static_cast<Vertex>(63 - std::countl_zero(bits_)); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Complement relative to {0, ..., n-1}.
  constexpr VertexSet complement(std::size_t n) const {
    return VertexSet(~bits_ & range(n).bits_);
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }

  constexpr bool operator==(const VertexSet&) const = default;
  /// Orders by the underlying word; a fixed total order used for sorting families.
  constexpr auto operator<=>(const VertexSet&) const = default;

private:
  std::uint64_t bits_ = 0;
};

}  // namespace nkayles

template <>
struct std::hash<nkayles::VertexSet> {
  std::size_t operator()(nkayles::VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
