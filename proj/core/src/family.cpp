#include "syzcolor/family.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "syzcolor/errors.hpp"
#include "syzcolor/subsets.hpp"

namespace syzcolor {
namespace {

// Ordered colour classes from iterated degree refinement. The class order
// depends only on the isomorphism type.
std::vector<int> refined_colors(const Graph &g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v) {
    color[v] = g.degree(v);
  }
  int classes = -1;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v)) {
        nb.push_back(color[w]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (static_cast<int>(distinct.size()) == classes) {
      return color;
    }
    classes = static_cast<int>(distinct.size());
  }
}

class CodeSearch {
public:
  explicit CodeSearch(const Graph &g) : g_(g), n_(g.order()) {
    total_bits_ = n_ * (n_ - 1) / 2;
    auto color = refined_colors(g);
    order_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      order_[v] = v;
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return color[a] < color[b]; });
    // Position p may hold any vertex of the class that order_ puts there.
    pos_class_.resize(n_);
    for (int p = 0; p < n_; ++p) {
      pos_class_[p] = color[order_[p]];
    }
    class_color_ = color;
    perm_.assign(n_, -1);
    used_.assign(n_, 0);
  }

  std::uint64_t run() {
    place(0, 0);
    return best_;
  }

private:
  void place(int p, std::uint64_t prefix) {
    if (p == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || class_color_[v] != pos_class_[p]) {
        continue;
      }
      std::uint64_t next = prefix;
      for (int a = 0; a < p; ++a) {
        next = (next << 1) | (g_.adjacent(perm_[a], v) ? 1U : 0U);
      }
      if (have_best_) {
        const int len = (p + 1) * p / 2;
        const std::uint64_t best_prefix =
            len == 0 ? 0 : best_ >> (total_bits_ - len);
        if (next > best_prefix) {
          continue;
        }
      }
      used_[v] = 1;
      perm_[p] = v;
      place(p + 1, next);
      used_[v] = 0;
    }
  }

  const Graph &g_;
  int n_;
  int total_bits_ = 0;
  std::vector<Vertex> order_;
  std::vector<int> pos_class_;
  std::vector<int> class_color_;
  std::vector<Vertex> perm_;
  std::vector<char> used_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

std::vector<Graph> sorted_unique(std::set<CanonicalCode> codes) {
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto &c : codes) {
    out.push_back(from_canonical_code(c));
  }
  return out;
}

std::vector<Vertex> universal_vertices(const Graph &h) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) == h.order() - 1) {
      out.push_back(v);
    }
  }
  return out;
}

bool member_unchecked(const Graph &h, int n, int d) {
  if (d == 0) {
    return n >= 2 && h.max_degree() == n - 1;
  }
  auto universal = universal_vertices(h);
  const int m = n - static_cast<int>(universal.size()) - 2;
  if (m < 2 * d) {
    return false;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v) {
    if (!std::binary_search(universal.begin(), universal.end(), v)) {
      keep.push_back(v);
    }
  }
  Graph rest = induced(h, VertexSet(keep));
  for (auto [a, b] : rest.edges()) {
    if (rest.degree(a) != 1 || rest.degree(b) != 1) {
      continue;
    }
    std::vector<Vertex> remainder;
    for (Vertex v = 0; v < rest.order(); ++v) {
      if (v != a && v != b) {
        remainder.push_back(v);
      }
    }
    if (member_unchecked(induced(rest, VertexSet(remainder)), m, d - 1)) {
      return true;
    }
  }
  return false;
}

} // namespace

CanonicalCode canonical_code(const Graph &g) {
  if (g.order() > kCanonicalLimit) {
    throw CapacityError("canonical_code: " + std::to_string(g.order()) +
                        " vertices exceeds limit " + std::to_string(kCanonicalLimit));
  }
  if (g.order() < 2) {
    return {g.order(), 0};
  }
  return {g.order(), CodeSearch(g).run()};
}

Graph from_canonical_code(const CanonicalCode &code) {
  const int n = code.n;
  const int total = n * (n - 1) / 2;
  GraphBuilder b(n);
  int idx = 0;
  for (int v = 1; v < n; ++v) {
    for (int a = 0; a < v; ++a, ++idx) {
      if ((code.bits >> (total - 1 - idx)) & 1U) {
        b.add_edge(a, v);
      }
    }
  }
  return std::move(b).build();
}

bool are_isomorphic(const Graph &a, const Graph &b) {
  return a.order() == b.order() && a.size() == b.size() &&
         canonical_code(a) == canonical_code(b);
}

std::vector<Graph> all_graphs_up_to_isomorphism(int n) {
  if (n < 0) {
    throw DomainError("graph order must be non-negative");
  }
  if (n > kCanonicalLimit) {
    throw CapacityError("all_graphs_up_to_isomorphism: n=" + std::to_string(n) +
                        " exceeds limit " + std::to_string(kCanonicalLimit));
  }
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) {
      return it->second;
    }
  }
  std::vector<Graph> out;
  if (n == 0) {
    out.emplace_back(0);
  } else {
    std::set<CanonicalCode> codes;
    for (const Graph &smaller : all_graphs_up_to_isomorphism(n - 1)) {
      auto edges = smaller.edges();
      for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        GraphBuilder b(n);
        for (auto [u, v] : edges) {
          b.add_edge(u, v);
        }
        for (int u = 0; u < n - 1; ++u) {
          if ((mask >> u) & 1U) {
            b.add_edge(u, n - 1);
          }
        }
        codes.insert(canonical_code(std::move(b).build()));
      }
    }
    out = sorted_unique(std::move(codes));
  }
  std::lock_guard lock(mu);
  return cache.try_emplace(n, std::move(out)).first->second;
}

std::vector<Graph> enumerate_family(const FamilyIndex &idx) {
  validate(idx);
  if (idx.n > kCanonicalLimit) {
    throw CapacityError("enumerate_family: n=" + std::to_string(idx.n) +
                        " exceeds limit " + std::to_string(kCanonicalLimit));
  }
  std::set<CanonicalCode> codes;
  if (idx.d == 0) {
    for (const Graph &h : all_graphs_up_to_isomorphism(idx.n - 1)) {
      codes.insert(canonical_code(join(graphs::complete(1), h)));
    }
  } else {
    for (int m = 2 * idx.d; m <= idx.n - 2; ++m) {
      Graph head = graphs::complete(idx.n - m - 2);
      for (const Graph &inner : enumerate_family({m, idx.d - 1})) {
        codes.insert(
            canonical_code(join(head, disjoint_union(graphs::complete(2), inner))));
      }
    }
  }
  return sorted_unique(std::move(codes));
}

bool is_member(const Graph &h, const FamilyIndex &idx) {
  validate(idx);
  if (h.order() != idx.n) {
    throw DomainError("is_member: graph has " + std::to_string(h.order()) +
                      " vertices, family index expects " + std::to_string(idx.n));
  }
  return member_unchecked(h, idx.n, idx.d);
}

std::optional<VertexSet> find_family_member(const Graph &g, const FamilyIndex &idx,
                                            int limit) {
  validate(idx);
  if (g.order() > limit) {
    throw CapacityError("family freeness: " + std::to_string(g.order()) +
                        " vertices exceeds limit " + std::to_string(limit));
  }
  std::optional<VertexSet> witness;
  for_each_k_subset(g.order(), idx.n, [&](std::span<const Vertex> s) {
    VertexSet w(std::vector<Vertex>(s.begin(), s.end()));
    if (member_unchecked(induced(g, w), idx.n, idx.d)) {
      witness = std::move(w);
      return false;
    }
    return true;
  });
  return witness;
}

} // namespace syzcolor
