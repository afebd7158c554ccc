#include "syzcolor/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "syzcolor/errors.hpp"

namespace syzcolor {
namespace {

using Mask = std::uint64_t;

void require_capacity(const Graph &g, int limit, const char *what) {
  if (g.order() > limit || g.order() > 64) {
    throw CapacityError(std::string(what) + ": " + std::to_string(g.order()) +
                        " vertices exceeds limit " + std::to_string(limit));
  }
}

std::vector<Mask> masks(const Graph &g) {
  std::vector<Mask> out(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    out[v] = g.order() == 0 ? 0 : g.row(v)[0];
  }
  return out;
}

void grow_clique(const std::vector<Mask> &adj, int size, Mask candidates, int &best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates != 0) {
    if (size + std::popcount(candidates) <= best) {
      return;
    }
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    grow_clique(adj, size + 1, candidates & adj[v], best);
  }
}

bool try_color(const std::vector<Mask> &adj, const std::vector<Vertex> &order,
               std::size_t pos, int k, int used, std::vector<int> &color) {
  if (pos == order.size()) {
    return true;
  }
  Vertex v = order[pos];
  Mask forbidden = 0;
  for (Mask nb = adj[v]; nb != 0; nb &= nb - 1) {
    int w = std::countr_zero(nb);
    if (color[w] >= 0) {
      forbidden |= Mask{1} << color[w];
    }
  }
  int top = std::min(k, used + 1);
  for (int c = 0; c < top; ++c) {
    if (forbidden >> c & 1U) {
      continue;
    }
    color[v] = c;
    if (try_color(adj, order, pos + 1, k, std::max(used, c + 1), color)) {
      return true;
    }
  }
  color[v] = -1;
  return false;
}

} // namespace

int exact_clique_number(const Graph &g, int limit) {
  require_capacity(g, limit, "exact_clique_number");
  if (g.order() == 0) {
    return 0;
  }
  auto adj = masks(g);
  Mask all = g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
  int best = 0;
  grow_clique(adj, 0, all, best);
  return best;
}

int exact_chromatic_number(const Graph &g, int limit) {
  require_capacity(g, limit, "exact_chromatic_number");
  const int n = g.order();
  if (n == 0) {
    return 0;
  }
  auto adj = masks(g);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return std::popcount(adj[a]) > std::popcount(adj[b]);
  });
  for (int k = std::max(1, exact_clique_number(g, limit));; ++k) {
    std::vector<int> color(n, -1);
    if (try_color(adj, order, 0, k, 0, color)) {
      return k;
    }
  }
}

bool is_chordal(const Graph &g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<int> position(n, -1);
  for (int next = n - 1; next >= 0; --next) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (position[v] < 0 && (pick < 0 || weight[v] > weight[pick])) {
        pick = v;
      }
    }
    position[pick] = next;
    for (Vertex w : g.neighbors(pick)) {
      if (position[w] < 0) {
        ++weight[w];
      }
    }
  }
  // position ascending is a perfect elimination ordering iff g is chordal.
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) {
        later.push_back(w);
      }
    }
    if (later.size() < 2) {
      continue;
    }
    Vertex first = *std::min_element(later.begin(), later.end(), [&](Vertex a, Vertex b) {
      return position[a] < position[b];
    });
    for (Vertex w : later) {
      if (w != first && !g.adjacent(first, w)) {
        return false;
      }
    }
  }
  return true;
}

ColoringResult first_fit_coloring(const Graph &g, std::span<const Vertex> order) {
  const int n = g.order();
  std::vector<Vertex> ascending;
  if (order.empty() && n > 0) {
    ascending.resize(n);
    std::iota(ascending.begin(), ascending.end(), 0);
    order = ascending;
  }
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("first_fit_coloring: order is not a permutation");
  }
  ColoringResult result;
  result.colors.assign(n, -1);
  std::vector<char> taken;
  for (Vertex v : order) {
    if (v < 0 || v >= n || result.colors[v] >= 0) {
      throw std::invalid_argument("first_fit_coloring: order is not a permutation");
    }
    taken.assign(static_cast<std::size_t>(result.colors_used) + 1, 0);
    for (Vertex w : g.neighbors(v)) {
      if (result.colors[w] >= 0) {
        taken[result.colors[w]] = 1;
      }
    }
    int c = 0;
    while (taken[c]) {
      ++c;
    }
    result.colors[v] = c;
    result.colors_used = std::max(result.colors_used, c + 1);
  }
  return result;
}

} // namespace syzcolor
