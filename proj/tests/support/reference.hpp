#pragma once

// Slow reference implementations used only by the tests. None of these call
// into the library algorithms they are compared against; they only use Graph
// as a container.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "syzcolor/graph.hpp"

namespace ref {

using syzcolor::Graph;
using syzcolor::Vertex;
using syzcolor::VertexSet;

/// Graph on n vertices whose edges are the set bits of `mask` in the
/// lexicographic pair order (0,1), (0,2), ..., (n-2,n-1).
Graph from_edge_mask(int n, std::uint64_t mask);

/// Calls fn on every labelled graph with exactly n vertices.
void for_each_labeled_graph(int n, const std::function<void(const Graph &)> &fn);

/// Edge with probability 1/2 per pair, driven by std::bernoulli_distribution
/// so it shares no code with the library generator.
Graph random_graph(int n, std::mt19937_64 &rng, double p = 0.5);

int clique_number(const Graph &g);
int chromatic_number(const Graph &g);

/// Checks the two clique conditions literally: (1) no outside vertex is
/// adjacent to all of k; (2) no member u and adjacent outside pair v, w both
/// adjacent to every member of k except u.
bool is_one_maximal(const Graph &g, const VertexSet &k);
bool is_two_maximal(const Graph &g, const VertexSet &k);

/// Repeatedly deletes simplicial vertices.
bool is_chordal(const Graph &g);

bool isomorphic(const Graph &a, const Graph &b);

/// Reduced homology of Ind(g) over Q by dense exact rational elimination of
/// every boundary matrix. dims[d] for d = -1..n-1 stored at index d + 1.
std::vector<std::int64_t> reduced_homology(const Graph &g);

/// dim H~_d(Ind(g)) over Q, d >= -1.
std::int64_t homology_dim(const Graph &g, int d);

/// Hochster sum over all j-subsets.
std::int64_t betti(const Graph &g, int i, int j);

/// B_{n,d} generated straight from the definition (universal vertex for
/// d = 0, joins with K2 u B_{m,d-1} otherwise), deduplicated by brute-force
/// isomorphism.
std::vector<Graph> family(int n, int d);

} // namespace ref
