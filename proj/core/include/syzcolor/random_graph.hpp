#pragma once

#include <cstdint>
#include <random>

#include "syzcolor/graph.hpp"

namespace syzcolor {

// Erdos-Renyi G(n, p) driven by std::mt19937_64. Pairs (u, v), u < v, are
// visited in lexicographic order and each consumes one 64-bit draw whose top
// 53 bits are compared against p, so the output depends only on (n, p, state)
// and not on the standard library's distribution implementations.
Graph random_gnp(int n, double p, std::mt19937_64 &rng);
Graph random_gnp(int n, double p, std::uint64_t seed);

} // namespace syzcolor
