#pragma once

#include <optional>
#include <vector>

#include "syzcolor/bigint.hpp"

namespace syzcolor {

struct ColoringResult {
  /// colors[v] in 0..colors_used-1, every value in that range used.
  std::vector<int> colors;
  int colors_used = 0;
  /// Bounding-function value at the exact (or caller supplied) clique number;
  /// empty when no clique number was available.
  std::optional<BigInt> certified_bound;
  /// True only when the hypothesis behind certified_bound was checked or
  /// asserted by the caller. Otherwise the bound is advisory.
  bool bound_certified = false;
  /// Size of the anchor clique at every recursion node, in visit order.
  std::vector<int> clique_trace;
};

} // namespace syzcolor
