#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "syzcolor/bounds.hpp"
#include "syzcolor/graph.hpp"

namespace syzcolor {

inline constexpr int kCanonicalLimit = 8;
inline constexpr int kFreenessLimit = 12;

/// Isomorphism-invariant code of a graph with at most kCanonicalLimit
/// vertices: the order plus the minimum upper-triangle adjacency bit-string
/// over all vertex orderings that respect an iterated degree refinement.
struct CanonicalCode {
  int n = 0;
  std::uint64_t bits = 0;
  friend bool operator==(const CanonicalCode &, const CanonicalCode &) = default;
  friend auto operator<=>(const CanonicalCode &, const CanonicalCode &) = default;
};

CanonicalCode canonical_code(const Graph &g);
Graph from_canonical_code(const CanonicalCode &code);
bool are_isomorphic(const Graph &a, const Graph &b);

/// One representative per isomorphism class of n-vertex graphs, sorted by
/// canonical code. n <= kCanonicalLimit.
std::vector<Graph> all_graphs_up_to_isomorphism(int n);

/// Members of B_{n,d} up to isomorphism, sorted by canonical code.
/// B_{n,0}: n-vertex graphs with a universal vertex.
/// B_{n,d}: union over m = 2d..n-2 of K_{n-m-2} + (K2 u B_{m,d-1}).
std::vector<Graph> enumerate_family(const FamilyIndex &idx);

/// Membership by decomposition: the join part of K_{n-m-2} + (K2 u H') is
/// exactly the set U of universal vertices (a K2 vertex misses H', an H'
/// vertex misses the K2), so h - U must contain an isolated-edge component
/// whose removal leaves a member of B_{n-|U|-2, d-1}. All such components are
/// tried. Throws DomainError when h.order() != idx.n.
bool is_member(const Graph &h, const FamilyIndex &idx);

/// Lexicographically first idx.n-subset inducing a member of B_{n,d}.
/// Throws CapacityError when g.order() > limit.
std::optional<VertexSet> find_family_member(const Graph &g, const FamilyIndex &idx,
                                            int limit = kFreenessLimit);

inline bool is_family_free(const Graph &g, const FamilyIndex &idx,
                           int limit = kFreenessLimit) {
  return !find_family_member(g, idx, limit).has_value();
}

} // namespace syzcolor
