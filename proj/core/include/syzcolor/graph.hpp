#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace syzcolor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Canonical vertex subset: ascending, duplicate free.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  Vertex operator[](std::size_t i) const { return members_[i]; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet &, const VertexSet &) = default;
  friend auto operator<=>(const VertexSet &, const VertexSet &) = default;

private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1. Adjacency is stored as one
/// bit row per vertex so neighbourhood intersections cost O(n / 64).
/// Instances are immutable once built.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::out_of_range on bad endpoints and std::invalid_argument on
  /// self-loops. Repeated edges are collapsed.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }
  bool empty() const { return n_ == 0; }

  bool adjacent(Vertex u, Vertex v) const {
    return (row_ptr(u)[static_cast<unsigned>(v) >> 6] >> (v & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {row_ptr(v), static_cast<std::size_t>(words_)};
  }
  int words_per_row() const { return words_; }

  int degree(Vertex v) const;
  int max_degree() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Edges (u, v) with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

private:
  friend class GraphBuilder;

  const std::uint64_t *row_ptr(Vertex v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  int n_ = 0;
  int words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Incremental construction for large or generated graphs.
class GraphBuilder {
public:
  explicit GraphBuilder(int n);
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  Graph build() &&;

private:
  Graph g_;
};

Graph disjoint_union(const Graph &g, const Graph &h);
Graph join(const Graph &g, const Graph &h);
/// Relabels the kept vertices 0..|u|-1 in ascending original order.
Graph induced(const Graph &g, const VertexSet &u);
Graph complement(const Graph &g);

bool is_proper_coloring(const Graph &g, std::span<const int> colors);
bool is_clique(const Graph &g, std::span<const Vertex> vertices);
bool is_independent(const Graph &g, std::span<const Vertex> vertices);
bool is_connected(const Graph &g);
bool is_triangle_free(const Graph &g);

namespace graphs {
Graph empty(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
/// p disjoint copies of K2.
Graph matching(int p);
/// Two triangles sharing vertex 0.
Graph bowtie();
/// K4 minus one edge.
Graph diamond();
} // namespace graphs

} // namespace syzcolor
