#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "reference.hpp"
#include "syzcolor/errors.hpp"
#include "syzcolor/graph.hpp"
#include "syzcolor/graph_io.hpp"
#include "syzcolor/oracles.hpp"
#include "syzcolor/random_graph.hpp"
#include "syzcolor/subsets.hpp"

using namespace syzcolor;

TEST(VertexSet, SortsAndDeduplicates) {
  VertexSet s{3, 1, 3, 0};
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], 0);
  EXPECT_EQ(s[2], 3);
  EXPECT_TRUE(s.contains(1));
  EXPECT_FALSE(s.contains(2));
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 3}}), std::out_of_range);
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.size(), 1u);
}

TEST(Graph, LargeRowsSpanSeveralWords) {
  GraphBuilder b(130);
  b.add_edge(0, 129);
  b.add_edge(64, 65);
  Graph g = std::move(b).build();
  EXPECT_EQ(g.words_per_row(), 3);
  EXPECT_TRUE(g.adjacent(129, 0));
  EXPECT_TRUE(g.adjacent(65, 64));
  EXPECT_FALSE(g.adjacent(0, 64));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 129}, {64, 65}}));
}

TEST(Graph, DisjointUnion) {
  Graph k2 = graphs::complete(2);
  Graph two = disjoint_union(k2, k2);
  EXPECT_EQ(two, Graph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(disjoint_union(graphs::cycle(5), graphs::empty(0)), graphs::cycle(5));
  Graph p3k1 = disjoint_union(graphs::path(3), graphs::empty(1));
  EXPECT_EQ(p3k1.order(), 4);
  EXPECT_EQ(p3k1.size(), 2u);
}

TEST(Graph, Join) {
  Graph bowtie = join(graphs::empty(1), graphs::matching(2));
  EXPECT_EQ(bowtie.order(), 5);
  EXPECT_EQ(bowtie.size(), 6u);
  EXPECT_EQ(bowtie, graphs::bowtie());
  EXPECT_EQ(join(graphs::complete(2), graphs::complete(3)), graphs::complete(5));
  EXPECT_EQ(join(graphs::empty(0), graphs::path(4)), graphs::path(4));
}

TEST(Graph, Induced) {
  EXPECT_EQ(induced(graphs::cycle(5), {0, 1, 2}), graphs::path(3));
  Graph c5 = graphs::cycle(5);
  EXPECT_EQ(induced(c5, {0, 1, 2, 3, 4}), c5);
  EXPECT_EQ(induced(c5, {}).order(), 0);
  EXPECT_THROW(induced(c5, {0, 7}), std::out_of_range);
}

TEST(Graph, Complement) {
  EXPECT_EQ(complement(graphs::cycle(4)), Graph(4, {{0, 2}, {1, 3}}));
  EXPECT_EQ(complement(graphs::complete(5)), graphs::empty(5));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Graph g = ref::random_graph(9, rng);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(Graph, Predicates) {
  EXPECT_TRUE(is_connected(graphs::path(6)));
  EXPECT_FALSE(is_connected(graphs::matching(2)));
  EXPECT_TRUE(is_connected(graphs::empty(0)));
  EXPECT_TRUE(is_triangle_free(graphs::cycle(5)));
  EXPECT_FALSE(is_triangle_free(graphs::bowtie()));
  std::vector<Vertex> tri{0, 1, 2};
  EXPECT_TRUE(is_clique(graphs::bowtie(), tri));
  std::vector<Vertex> opp{1, 3};
  EXPECT_TRUE(is_independent(graphs::bowtie(), opp));
}

TEST(Oracles, CliqueNumber) {
  EXPECT_EQ(exact_clique_number(graphs::complete(5)), 5);
  EXPECT_EQ(exact_clique_number(graphs::cycle(5)), 2);
  EXPECT_EQ(exact_clique_number(graphs::empty(4)), 1);
  EXPECT_EQ(exact_clique_number(graphs::empty(0)), 0);
  EXPECT_THROW(exact_clique_number(graphs::empty(40)), CapacityError);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    Graph g = ref::random_graph(4 + t % 9, rng, 0.3 + 0.005 * t);
    ASSERT_EQ(exact_clique_number(g), ref::clique_number(g));
  }
}

TEST(Oracles, ChromaticNumber) {
  EXPECT_EQ(exact_chromatic_number(graphs::cycle(5)), 3);
  EXPECT_EQ(exact_chromatic_number(graphs::complete(6)), 6);
  EXPECT_EQ(exact_chromatic_number(graphs::path(4)), 2);
  EXPECT_THROW(exact_chromatic_number(graphs::empty(20)), CapacityError);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    Graph g = ref::random_graph(3 + t % 8, rng, 0.2 + 0.006 * t);
    ASSERT_EQ(exact_chromatic_number(g), ref::chromatic_number(g));
  }
}

TEST(Oracles, Chordal) {
  EXPECT_FALSE(is_chordal(graphs::cycle(4)));
  EXPECT_TRUE(is_chordal(graphs::star(5)));
  EXPECT_TRUE(is_chordal(graphs::path(7)));
  EXPECT_TRUE(is_chordal(graphs::matching(2)));
  for (int n = 0; n <= 6; ++n) {
    ref::for_each_labeled_graph(n, [](const Graph &g) {
      ASSERT_EQ(is_chordal(g), ref::is_chordal(g));
    });
  }
}

TEST(Oracles, FirstFit) {
  auto e = first_fit_coloring(graphs::empty(3));
  EXPECT_EQ(e.colors, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(first_fit_coloring(graphs::complete(3)).colors_used, 3);
  EXPECT_EQ(first_fit_coloring(graphs::path(4)).colors_used, 2);
  std::vector<Vertex> bad{0, 0, 1};
  EXPECT_THROW(first_fit_coloring(graphs::path(3), bad), std::invalid_argument);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    Graph g = ref::random_graph(20, rng, 0.3);
    auto c = first_fit_coloring(g);
    EXPECT_TRUE(is_proper_coloring(g, c.colors));
    EXPECT_LE(c.colors_used, g.max_degree() + 1);
  }
}

TEST(RandomGraph, DeterministicAndDense) {
  EXPECT_EQ(random_gnp(30, 0.4, 99), random_gnp(30, 0.4, 99));
  EXPECT_NE(random_gnp(30, 0.4, 99), random_gnp(30, 0.4, 100));
  EXPECT_EQ(random_gnp(10, 0.0, 1).size(), 0u);
  EXPECT_EQ(random_gnp(10, 1.0, 1).size(), 45u);
  Graph g = random_gnp(400, 0.05, 5);
  const double expected = 0.05 * 400 * 399 / 2;
  EXPECT_NEAR(static_cast<double>(g.size()), expected, 0.1 * expected);
  EXPECT_THROW(random_gnp(5, 1.5, 1), DomainError);
}

TEST(Subsets, LexicographicOrder) {
  auto s = k_subsets(4, 2);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.front(), (VertexSet{0, 1}));
  EXPECT_EQ(s[1], (VertexSet{0, 2}));
  EXPECT_EQ(s.back(), (VertexSet{2, 3}));
  EXPECT_EQ(k_subsets(3, 0).size(), 1u);
  EXPECT_TRUE(k_subsets(3, 4).empty());
}

TEST(GraphIo, Dimacs) {
  std::istringstream in("c comment\np edge 4 2\ne 1 2\ne 3 4\n");
  Graph g = read_dimacs(in);
  EXPECT_EQ(g, graphs::matching(2));
  std::ostringstream out;
  write_dimacs(out, g);
  std::istringstream back(out.str());
  EXPECT_EQ(read_graph(back), g);
}

TEST(GraphIo, EdgeList) {
  std::istringstream in("# vertices: 6\n0 1\n# note\n1 2\n");
  Graph g = read_edge_list(in);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 2u);
  std::istringstream bare("0 1\n3 2\n");
  EXPECT_EQ(read_graph(bare).order(), 4);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  EXPECT_EQ(read_graph(back, GraphFormat::edge_list), g);
}

TEST(GraphIo, Malformed) {
  std::istringstream a("p edge 3 1\ne 1 4\n");
  EXPECT_THROW(read_dimacs(a), ParseError);
  std::istringstream b("0 x\n");
  EXPECT_THROW(read_edge_list(b), ParseError);
  std::istringstream c("e 1 2\n");
  EXPECT_THROW(read_dimacs(c), ParseError);
  std::istringstream d("2 2\n");
  EXPECT_THROW(read_edge_list(d), ParseError);
  EXPECT_THROW(read_graph_file("/definitely/missing.txt"), ParseError);
  EXPECT_THROW(parse_graph_format("xml"), DomainError);
}
