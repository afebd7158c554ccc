#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "syzcolor/bounds.hpp"
#include "syzcolor/clique_search.hpp"
#include "syzcolor/coloring_result.hpp"
#include "syzcolor/graph.hpp"
#include "syzcolor/homology.hpp"
#include "syzcolor/oracles.hpp"

namespace syzcolor {

/// Partition of V(G) around a 2-maximal clique K = {k_0 < ... < k_{t-1}}.
///
/// Clique positions are 0-based here (position p is the (p+1)-th smallest
/// member). A vertex outside K missing exactly one member k_p goes to
/// d_blocks[p]; a vertex missing two or more goes to the C-block keyed by its
/// two smallest missing positions.
struct PartitionResult {
  Clique clique;
  /// d_blocks[p] = {k_p} plus the outside vertices whose only miss is k_p.
  std::vector<VertexSet> d_blocks;
  /// Only nonempty blocks are stored, keyed by positions (p, q), p < q.
  std::map<std::pair<int, int>, VertexSet> c_blocks;

  const VertexSet &c_block(int p, int q) const;
};

/// Throws std::invalid_argument on the empty graph and std::logic_error if a
/// D-block is not independent (that would mean the clique was not 2-maximal).
PartitionResult partition_by_clique(const Graph &g);

/// Re-derives the C-blocks from the set-subtraction definition
/// C_{p,q} = C'_{p,q} minus every C'_{r,s} with r < p, and minus C'_{p,s}
/// for p < s < q, where C'_{p,q} holds the outside vertices missing both
/// k_p and k_q. Returns true when it matches `part` and all blocks partition
/// V(G).
bool partition_matches_definition(const Graph &g, const PartitionResult &part);

struct ColorOptions {
  /// Clique number to evaluate the bound at; computed exactly when absent
  /// and the graph has at most exact_omega_limit vertices.
  std::optional<int> omega;
  /// Caller guarantees the input is B_{n,d}-free.
  bool assume_free = false;
  /// Run the exhaustive freeness check (only when order <= freeness_limit).
  bool verify_freeness = false;
  int exact_omega_limit = kExactCliqueLimit;
  int freeness_limit = 12;
};

/// Recursive colouring for B_{n,d}-free graphs. d = 0 is first-fit in
/// ascending id order. For d > 0 each D-block gets one fresh colour, then
/// each nonempty C-block (lexicographic by positions) is coloured
/// recursively with index (max(n - q - 1, 2d), d - 1), q the 0-based larger
/// position, in a fresh contiguous colour range. The output is proper for
/// every input graph; the bound in the result only holds for free inputs.
ColoringResult color(const Graph &g, const FamilyIndex &idx, const ColorOptions &opts = {});

struct BettiColorOptions {
  std::optional<int> omega;
  /// Caller guarantees beta_{i,j}(I_G) = 0.
  bool assume_vanishing = false;
  /// Run betti_vanishes (only when order <= betti.limit).
  bool verify_vanishing = false;
  BettiOptions betti;
};

/// color() with (n, d) = (j, j - i - 2). On triangle-free input the bound is
/// min(g_{j, j-i-2}(omega), j - 1).
ColoringResult color_for_betti(const Graph &g, const BettiIndex &idx,
                               const BettiColorOptions &opts = {});

/// Bound actually achieved at the root when the anchor clique has t <= omega
/// vertices: t + sum_{q=2}^{t} (q - 1) g_{max(n-q, 2d), d-1}(omega - q + 2).
/// Equals g_eval(n, d, omega) when t = omega.
BigInt refined_root_bound(const FamilyIndex &idx, int omega, int clique_size);

} // namespace syzcolor
