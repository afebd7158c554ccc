#include "syzcolor/coloring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "syzcolor/errors.hpp"
#include "syzcolor/family.hpp"

namespace syzcolor {
namespace {

const VertexSet kEmptyBlock;

bool block_independent(const Graph &g, const VertexSet &block) {
  std::vector<std::uint64_t> mask(g.words_per_row(), 0);
  for (Vertex v : block) {
    mask[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  for (Vertex v : block) {
    auto r = g.row(v);
    for (std::size_t w = 0; w < mask.size(); ++w) {
      if (r[w] & mask[w]) {
        return false;
      }
    }
  }
  return true;
}

// Colours g into out[] starting at `offset`; returns the number of colours
// used (all of offset..offset+used-1 appear).
int color_into(const Graph &g, int n, int d, int offset, std::vector<int> &out,
               std::vector<int> &trace) {
  if (g.order() == 0) {
    return 0;
  }
  if (d == 0) {
    auto ff = first_fit_coloring(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      out[v] = offset + ff.colors[v];
    }
    return ff.colors_used;
  }
  auto part = partition_by_clique(g);
  const int t = static_cast<int>(part.clique.vertices.size());
  trace.push_back(t);
  for (int p = 0; p < t; ++p) {
    for (Vertex v : part.d_blocks[p]) {
      out[v] = offset + p;
    }
  }
  int next = offset + t;
  for (const auto &[key, block] : part.c_blocks) {
    Graph sub = induced(g, block);
    std::vector<int> sub_colors(sub.order(), -1);
    const int child_n = std::max(n - key.second - 1, 2 * d);
    int used = color_into(sub, child_n, d - 1, next, sub_colors, trace);
    for (std::size_t a = 0; a < block.size(); ++a) {
      out[block[a]] = sub_colors[a];
    }
    next += used;
  }
  return next - offset;
}

} // namespace

const VertexSet &PartitionResult::c_block(int p, int q) const {
  auto it = c_blocks.find({p, q});
  return it == c_blocks.end() ? kEmptyBlock : it->second;
}

PartitionResult partition_by_clique(const Graph &g) {
  if (g.order() == 0) {
    throw std::invalid_argument("partition_by_clique: graph is empty");
  }
  PartitionResult part;
  part.clique = two_maximal_clique(g);
  const auto &k = part.clique.vertices;
  const int t = static_cast<int>(k.size());
  std::vector<std::vector<Vertex>> d(t);
  std::map<std::pair<int, int>, std::vector<Vertex>> c;
  for (int p = 0; p < t; ++p) {
    d[p].push_back(k[p]);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (k.contains(v)) {
      continue;
    }
    int first = -1;
    int second = -1;
    for (int p = 0; p < t && second < 0; ++p) {
      if (!g.adjacent(v, k[p])) {
        (first < 0 ? first : second) = p;
      }
    }
    if (first < 0) {
      throw std::logic_error("partition_by_clique: anchor clique is not maximal");
    }
    if (second < 0) {
      d[first].push_back(v);
    } else {
      c[{first, second}].push_back(v);
    }
  }
  for (auto &block : d) {
    part.d_blocks.emplace_back(std::move(block));
    if (!block_independent(g, part.d_blocks.back())) {
      throw std::logic_error("partition_by_clique: dependent D-block; clique checker bug");
    }
  }
  for (auto &[key, block] : c) {
    part.c_blocks.emplace(key, VertexSet(std::move(block)));
  }
  return part;
}

bool partition_matches_definition(const Graph &g, const PartitionResult &part) {
  const auto &k = part.clique.vertices;
  const int t = static_cast<int>(k.size());
  auto misses_both = [&](Vertex v, int p, int q) {
    return !k.contains(v) && !g.adjacent(v, k[p]) && !g.adjacent(v, k[q]);
  };
  std::vector<int> hits(g.order(), 0);
  for (Vertex v : k) {
    ++hits[v];
  }
  for (int p = 0; p < t; ++p) {
    for (Vertex v : part.d_blocks[p]) {
      if (v != k[p]) {
        ++hits[v];
      }
      if (v == k[p]) {
        continue;
      }
      if (k.contains(v)) {
        return false;
      }
      for (int r = 0; r < t; ++r) {
        if (g.adjacent(v, k[r]) == (r == p)) {
          return false;
        }
      }
    }
    if (part.d_blocks[p].empty() || !part.d_blocks[p].contains(k[p])) {
      return false;
    }
  }
  for (int p = 0; p < t; ++p) {
    for (int q = p + 1; q < t; ++q) {
      std::vector<Vertex> expected;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (!misses_both(v, p, q)) {
          continue;
        }
        bool earlier = false;
        for (int r = 0; r < p && !earlier; ++r) {
          for (int s = r + 1; s < t && !earlier; ++s) {
            earlier = misses_both(v, r, s);
          }
        }
        for (int s = p + 1; s < q && !earlier; ++s) {
          earlier = misses_both(v, p, s);
        }
        if (!earlier) {
          expected.push_back(v);
        }
      }
      if (VertexSet(expected) != part.c_block(p, q)) {
        return false;
      }
      for (Vertex v : expected) {
        ++hits[v];
      }
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

ColoringResult color(const Graph &g, const FamilyIndex &idx, const ColorOptions &opts) {
  validate(idx);
  ColoringResult result;
  result.colors.assign(g.order(), -1);
  result.colors_used = color_into(g, idx.n, idx.d, 0, result.colors, result.clique_trace);
  if (!is_proper_coloring(g, result.colors)) {
    throw std::logic_error("color: produced an improper colouring");
  }
  std::optional<int> omega = opts.omega;
  if (!omega && g.order() <= opts.exact_omega_limit) {
    omega = exact_clique_number(g, opts.exact_omega_limit);
  }
  if (omega && *omega >= 1) {
    result.certified_bound = g_eval(idx, *omega);
  }
  if (opts.assume_free) {
    result.bound_certified = true;
  } else if (opts.verify_freeness && g.order() <= opts.freeness_limit) {
    result.bound_certified = is_family_free(g, idx, opts.freeness_limit);
  }
  if (!result.certified_bound) {
    result.bound_certified = false;
  }
  return result;
}

ColoringResult color_for_betti(const Graph &g, const BettiIndex &idx,
                               const BettiColorOptions &opts) {
  const FamilyIndex fam = betti_family(idx);
  ColorOptions copts;
  copts.omega = opts.omega;
  copts.assume_free = opts.assume_vanishing;
  auto result = color(g, fam, copts);
  if (!opts.assume_vanishing && opts.verify_vanishing && g.order() <= opts.betti.limit) {
    result.bound_certified =
        result.certified_bound.has_value() && betti_vanishes(g, idx, opts.betti).vanishes;
  }
  if (result.certified_bound && is_triangle_free(g)) {
    result.certified_bound = std::min(*result.certified_bound, BigInt(idx.j - 1));
  }
  return result;
}

BigInt refined_root_bound(const FamilyIndex &idx, int omega, int clique_size) {
  validate(idx);
  if (omega < 1 || clique_size < 1 || clique_size > omega) {
    throw DomainError("refined_root_bound: need 1 <= clique size <= omega");
  }
  if (idx.d == 0 || omega == 1) {
    return g_eval(idx, omega);
  }
  BigInt sum = clique_size;
  for (int q = 2; q <= clique_size; ++q) {
    sum += (q - 1) * g_eval(std::max(idx.n - q, 2 * idx.d), idx.d - 1, omega - q + 2);
  }
  return sum;
}

} // namespace syzcolor
