#include "syzcolor/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace syzcolor {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(int n) {
  if (n < 0) {
    throw std::invalid_argument("graph order must be non-negative");
  }
  n_ = n;
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) {
    b.add_edge(u, v);
  }
  *this = std::move(b).build();
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (auto w : row(v)) {
    d += std::popcount(w);
  }
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) {
    best = std::max(best, degree(v));
  }
  return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    for (auto bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + std::countr_zero(bits));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_) {
    throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) +
                            " " + std::to_string(v));
  }
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  if (g_.adjacent(u, v)) {
    return;
  }
  auto set = [&](Vertex a, Vertex b) {
    g_.bits_[static_cast<std::size_t>(a) * g_.words_ + (b >> 6)] |=
        std::uint64_t{1} << (b & 63);
  };
  set(u, v);
  set(v, u);
  ++g_.edge_count_;
}

Graph GraphBuilder::build() && { return std::move(g_); }

Graph disjoint_union(const Graph &g, const Graph &h) {
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) {
    b.add_edge(u, v);
  }
  for (auto [u, v] : h.edges()) {
    b.add_edge(u + g.order(), v + g.order());
  }
  return std::move(b).build();
}

Graph join(const Graph &g, const Graph &h) {
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) {
    b.add_edge(u, v);
  }
  for (auto [u, v] : h.edges()) {
    b.add_edge(u + g.order(), v + g.order());
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) {
      b.add_edge(u, v + g.order());
    }
  }
  return std::move(b).build();
}

Graph induced(const Graph &g, const VertexSet &u) {
  for (Vertex v : u) {
    if (v < 0 || v >= g.order()) {
      throw std::out_of_range("induced: vertex " + std::to_string(v) +
                              " outside 0.." + std::to_string(g.order() - 1));
    }
  }
  const int k = static_cast<int>(u.size());
  GraphBuilder b(k);
  for (int a = 0; a < k; ++a) {
    for (int c = a + 1; c < k; ++c) {
      if (g.adjacent(u[a], u[c])) {
        b.add_edge(a, c);
      }
    }
  }
  return std::move(b).build();
}

Graph complement(const Graph &g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) {
        b.add_edge(u, v);
      }
    }
  }
  return std::move(b).build();
}

bool is_proper_coloring(const Graph &g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.order()) {
    return false;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (colors[v] < 0) {
      return false;
    }
  }
  for (auto [u, v] : g.edges()) {
    if (colors[u] == colors[v]) {
      return false;
    }
  }
  return true;
}

bool is_clique(const Graph &g, std::span<const Vertex> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (!g.adjacent(vertices[a], vertices[b])) {
        return false;
      }
    }
  }
  return true;
}

bool is_independent(const Graph &g, std::span<const Vertex> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (g.adjacent(vertices[a], vertices[b])) {
        return false;
      }
    }
  }
  return true;
}

bool is_connected(const Graph &g) {
  if (g.order() <= 1) {
    return true;
  }
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

bool is_triangle_free(const Graph &g) {
  for (auto [u, v] : g.edges()) {
    auto ru = g.row(u);
    auto rv = g.row(v);
    for (int w = 0; w < g.words_per_row(); ++w) {
      if (ru[w] & rv[w]) {
        return false;
      }
    }
  }
  return true;
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph path(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) {
    b.add_edge(v, v + 1);
  }
  return std::move(b).build();
}

Graph cycle(int n) {
  if (n < 3) {
    throw std::invalid_argument("cycle needs at least 3 vertices");
  }
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) {
    b.add_edge(v, (v + 1) % n);
  }
  return std::move(b).build();
}

Graph star(int leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) {
    b.add_edge(0, v);
  }
  return std::move(b).build();
}

Graph matching(int p) {
  GraphBuilder b(2 * p);
  for (Vertex v = 0; v < p; ++v) {
    b.add_edge(2 * v, 2 * v + 1);
  }
  return std::move(b).build();
}

Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

} // namespace graphs

} // namespace syzcolor
