#pragma once

#include <cstdint>
#include <span>

#include "syzcolor/coloring_result.hpp"
#include "syzcolor/graph.hpp"

namespace syzcolor {

inline constexpr int kExactCliqueLimit = 32;
inline constexpr int kExactChromaticLimit = 14;

// Exhaustive branch and bound. Throws CapacityError above `limit` vertices.
int exact_clique_number(const Graph &g, int limit = kExactCliqueLimit);

// Backtracking over colour classes with the usual "new colour = max + 1"
// symmetry break. Throws CapacityError above `limit` vertices.
int exact_chromatic_number(const Graph &g, int limit = kExactChromaticLimit);

// Maximum cardinality search followed by a perfect-elimination check.
bool is_chordal(const Graph &g);

// Greedy colouring in the given order (ascending id when empty). Each vertex
// takes the smallest colour not used by an earlier neighbour, so at most
// max_degree + 1 colours appear.
ColoringResult first_fit_coloring(const Graph &g, std::span<const Vertex> order = {});

} // namespace syzcolor
