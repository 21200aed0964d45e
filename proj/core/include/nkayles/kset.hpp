#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nkayles/graph.hpp"

namespace nkayles {

/// Witness (W, N(X), X) of a K-set W.
struct KSetTriple {
  VertexSet w;
  VertexSet separator;
  VertexSet x;

  bool operator==(const KSetTriple&) const = default;
};

/// Why verify_kset_triple rejected a triple.
enum class TripleDefect {
  none,
  not_a_partition,
  x_not_independent,
  separator_mismatch,
  w_empty,
  w_disconnected,
  w_touches_x,
};

std::string_view to_string(TripleDefect d);

struct TripleCheck {
  TripleDefect defect = TripleDefect::none;
  bool ok() const { return defect == TripleDefect::none; }
  explicit operator bool() const { return ok(); }
};

TripleCheck verify_kset_triple(const Graph& g, const KSetTriple& t);

/// Deduplicated K-sets of one graph, sorted ascending.
class KSetFamily {
public:
  KSetFamily() = default;
  /// Sorts and deduplicates `sets`.
  explicit KSetFamily(std::vector<VertexSet> sets);

  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  bool contains(VertexSet s) const;
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  const std::vector<VertexSet>& sets() const { return sets_; }

  bool operator==(const KSetFamily&) const = default;

private:
  std::vector<VertexSet> sets_;
};

/// Default cap of the independent-set enumeration.
inline constexpr std::size_t kEnumerationMaxVertices = 24;

/// All K-sets: every connected component of V - N[X] over independent X,
/// found by backtracking over independent sets in ascending vertex order.
KSetFamily enumerate_ksets(const Graph& g, std::size_t max_vertices = kEnumerationMaxVertices);
std::uint64_t count_ksets(const Graph& g, std::size_t max_vertices = kEnumerationMaxVertices);

/// The positions memoized by the nimber engine on a fresh table.
KSetFamily ksets_via_dp(const Graph& g, std::size_t max_vertices = kEnumerationMaxVertices);

/// A witness triple for `w`, or none if `w` is not a K-set.
std::optional<KSetTriple> find_kset_triple(const Graph& g, VertexSet w,
                                           std::size_t max_vertices = kEnumerationMaxVertices);

/// Every K-set triple, one per independent X with V - N[X] nonempty and connected.
std::vector<KSetTriple> enumerate_kset_triples(
    const Graph& g, std::size_t max_vertices = kEnumerationMaxVertices);

/// 3^t + n - t - 2^t, saturating at UINT64_MAX.
std::uint64_t vc_kset_bound(std::size_t n, std::size_t tau);

struct VcBoundReport {
  std::uint64_t kappa = 0;
  std::size_t tau = 0;
  std::uint64_t bound = 0;
  bool holds = false;
};

/// Compares kappa(G) against the vertex-cover bound with tau = |minimum cover|.
VcBoundReport check_vc_bound(const Graph& g);

struct TripartitionReport {
  std::size_t triples = 0;
  /// Triples with W meeting the cover.
  std::size_t checked = 0;
  bool injective = true;
  /// Two distinct triples mapped to one ordered tripartition.
  std::optional<std::pair<KSetTriple, KSetTriple>> collision;
};

/// Checks that (W, N(X), X) -> (W & C, N(X) & C, X & C) is injective over
/// the triples whose W meets the vertex cover `cover`.
TripartitionReport check_tripartition_injectivity(const Graph& g, VertexSet cover);

struct ExpansionReport {
  std::uint64_t kappa_graph = 0;
  std::uint64_t kappa_quotient = 0;
  std::uint64_t kappa_parts = 0;
  bool membership_holds = true;
  bool inequality_holds = true;
  /// First K-set of G that is neither an expanded quotient K-set nor a
  /// K-set of one part.
  std::optional<VertexSet> counterexample;

  bool holds() const { return membership_holds && inequality_holds; }
};

/// Verifies that every K-set of G expands a K-set of the quotient over
/// `partition` or is a K-set of one G[V_i], and that
/// kappa(G) <= kappa(H) + sum_i kappa(G[V_i]). `partition` must partition
/// V(G) into modules.
ExpansionReport check_expansion_decomposition(const Graph& g, std::span<const VertexSet> partition);

}  // namespace nkayles
