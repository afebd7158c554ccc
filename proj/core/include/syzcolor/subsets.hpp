#pragma once

#include <vector>

#include "syzcolor/graph.hpp"

namespace syzcolor {

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<VertexSet> k_subsets(int n, int k);

/// Calls fn(span<const Vertex>) for every k-subset of {0..n-1} in
/// lexicographic order; stops early when fn returns false.
template <class Fn>
bool for_each_k_subset(int n, int k, Fn &&fn) {
  if (k < 0 || k > n) {
    return true;
  }
  std::vector<Vertex> cur(k);
  for (int t = 0; t < k; ++t) {
    cur[t] = t;
  }
  for (;;) {
    if (!fn(std::span<const Vertex>(cur))) {
      return false;
    }
    int t = k - 1;
    while (t >= 0 && cur[t] == n - k + t) {
      --t;
    }
    if (t < 0) {
      return true;
    }
    ++cur[t];
    for (int s = t + 1; s < k; ++s) {
      cur[s] = cur[s - 1] + 1;
    }
  }
}

} // namespace syzcolor
