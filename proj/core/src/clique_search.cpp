#include "syzcolor/clique_search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "syzcolor/errors.hpp"

namespace syzcolor {
namespace {

using Words = std::vector<std::uint64_t>;

void set_bit(Words &w, Vertex v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
void clear_bit(Words &w, Vertex v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

std::optional<Vertex> lowest(const Words &w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0) {
      return static_cast<Vertex>(i * 64 + std::countr_zero(w[i]));
    }
  }
  return std::nullopt;
}

Words all_vertices(const Graph &g) {
  Words w(g.words_per_row(), ~std::uint64_t{0});
  if (g.order() % 64 != 0) {
    w.back() = (std::uint64_t{1} << (g.order() % 64)) - 1;
  }
  return w;
}

// Vertices adjacent to every member; members themselves are excluded because
// rows carry no self-loops (and are removed explicitly for the empty clique).
Words common_neighbours(const Graph &g, std::span<const Vertex> members) {
  Words cand = all_vertices(g);
  for (Vertex u : members) {
    auto r = g.row(u);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      cand[i] &= r[i];
    }
  }
  for (Vertex u : members) {
    clear_bit(cand, u);
  }
  return cand;
}

void require_clique(const Graph &g, const VertexSet &c) {
  for (Vertex v : c) {
    if (v < 0 || v >= g.order()) {
      throw ContractViolation("clique vertex out of range");
    }
  }
  if (!is_clique(g, c.members())) {
    throw ContractViolation("vertex set is not a clique");
  }
}

// Smallest 2-improvement of a clique already known to be 1-maximal.
std::optional<TwoImprovement> two_improvement_unchecked(const Graph &g, const VertexSet &c) {
  const int n = g.order();
  const int k = static_cast<int>(c.size());
  if (k == 0) {
    return std::nullopt;
  }
  Words members(g.words_per_row(), 0);
  for (Vertex u : c) {
    set_bit(members, u);
  }
  // swap[p] holds outside vertices whose only clique non-neighbour is c[p].
  std::vector<Words> swap(k);
  std::vector<char> any(k, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (c.contains(v)) {
      continue;
    }
    auto r = g.row(v);
    int tight = 0;
    Vertex missing = -1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      tight += std::popcount(r[i] & members[i]);
      if (std::uint64_t miss = members[i] & ~r[i]; miss != 0 && missing < 0) {
        missing = static_cast<Vertex>(i * 64 + std::countr_zero(miss));
      }
    }
    if (tight != k - 1) {
      continue;
    }
    auto pos = static_cast<std::size_t>(
        std::lower_bound(c.begin(), c.end(), missing) - c.begin());
    if (!any[pos]) {
      swap[pos].assign(g.words_per_row(), 0);
      any[pos] = 1;
    }
    set_bit(swap[pos], v);
  }
  for (int p = 0; p < k; ++p) {
    if (!any[p]) {
      continue;
    }
    const Words &s = swap[p];
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (auto bits = s[i]; bits != 0; bits &= bits - 1) {
        Vertex v = static_cast<Vertex>(i * 64 + std::countr_zero(bits));
        auto r = g.row(v);
        for (std::size_t t = 0; t < s.size(); ++t) {
          if (std::uint64_t both = r[t] & s[t]; both != 0) {
            Vertex w = static_cast<Vertex>(t * 64 + std::countr_zero(both));
            // Pairs are discovered from their smaller end first.
            return TwoImprovement{c[p], std::min(v, w), std::max(v, w)};
          }
        }
      }
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<Vertex> find_1_improvement(const Graph &g, const Clique &c) {
  require_clique(g, c.vertices);
  return lowest(common_neighbours(g, c.vertices.members()));
}

std::optional<TwoImprovement> find_2_improvement(const Graph &g, const Clique &c) {
  require_clique(g, c.vertices);
  if (lowest(common_neighbours(g, c.vertices.members()))) {
    throw ContractViolation("find_2_improvement needs a 1-maximal clique");
  }
  return two_improvement_unchecked(g, c.vertices);
}

Clique two_maximal_clique(const Graph &g) {
  std::vector<Vertex> members;
  Words cand = all_vertices(g);
  for (;;) {
    while (auto v = lowest(cand)) {
      members.push_back(*v);
      auto r = g.row(*v);
      for (std::size_t i = 0; i < cand.size(); ++i) {
        cand[i] &= r[i];
      }
    }
    VertexSet current(members);
    auto swap = two_improvement_unchecked(g, current);
    if (!swap) {
      return Clique{std::move(current), CliqueLevel::two_maximal};
    }
    std::erase(members, swap->remove);
    members.push_back(swap->add_first);
    members.push_back(swap->add_second);
    cand = common_neighbours(g, members);
  }
}

std::optional<CliqueLevel> classify_clique(const Graph &g, const VertexSet &vertices) {
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.order()) {
      return std::nullopt;
    }
  }
  if (!is_clique(g, vertices.members())) {
    return std::nullopt;
  }
  if (lowest(common_neighbours(g, vertices.members()))) {
    return CliqueLevel::arbitrary;
  }
  if (two_improvement_unchecked(g, vertices)) {
    return CliqueLevel::one_maximal;
  }
  return CliqueLevel::two_maximal;
}

} // namespace syzcolor
