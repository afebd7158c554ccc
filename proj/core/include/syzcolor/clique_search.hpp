#pragma once

#include <optional>

#include "syzcolor/graph.hpp"

namespace syzcolor {

enum class CliqueLevel { arbitrary, one_maximal, two_maximal };

/// A vertex set certified pairwise adjacent in its host graph.
///
/// one_maximal: no outside vertex is adjacent to every member.
/// two_maximal: additionally, no member u and adjacent outside pair v, w
/// with both v and w adjacent to every member other than u.
struct Clique {
  VertexSet vertices;
  CliqueLevel level = CliqueLevel::arbitrary;
};

/// Swap that removes one clique member and adds an adjacent outside pair.
struct TwoImprovement {
  Vertex remove;
  Vertex add_first;  ///< smaller of the added pair
  Vertex add_second;
};

/// Smallest vertex outside `c` adjacent to all of it, if any. O(n + m).
/// Throws ContractViolation when `c` is not a clique of `g`.
std::optional<Vertex> find_1_improvement(const Graph &g, const Clique &c);

/// Smallest (remove, add_first, add_second) 2-improvement, if any. Uses
/// per-vertex tightness counts (members adjacent to the vertex); a vertex with
/// exactly one non-neighbour u in the clique is a swap candidate for u.
/// Throws ContractViolation when `c` is not a 1-maximal clique of `g`.
std::optional<TwoImprovement> find_2_improvement(const Graph &g, const Clique &c);

/// Starts from the empty clique, exhausts 1-improvements, then applies the
/// smallest 2-improvement and repeats until neither exists. Deterministic.
Clique two_maximal_clique(const Graph &g);

/// Highest level `vertices` satisfies, or nullopt if it is not a clique.
std::optional<CliqueLevel> classify_clique(const Graph &g, const VertexSet &vertices);

} // namespace syzcolor
