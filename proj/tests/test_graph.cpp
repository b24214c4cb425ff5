#include <gtest/gtest.h>

#include <random>

#include "csr/enumerate.hpp"
#include "csr/graph.hpp"
#include "csr/graph6.hpp"
#include "oracles.hpp"

using namespace csr;

TEST(Graph, BuildTriangle) {
  Graph g = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g, complete_graph(3));
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(Graph, BuildEdgelessAndDuplicates) {
  Graph e = Graph::build(2, {});
  EXPECT_EQ(min_degree(e), 0u);
  EXPECT_EQ(e.edge_count(), 0u);
  Graph d = Graph::build(4, {{0, 1}, {1, 0}});
  EXPECT_EQ(d.edge_count(), 1u);
}

TEST(Graph, BuildRejectsBadEdges) {
  EXPECT_THROW(Graph::build(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph::build(3, {{1, 1}}), GraphError);
}

TEST(Graph, ComplementExamples) {
  EXPECT_EQ(complement(complete_graph(4)).edge_count(), 0u);
  EXPECT_EQ(complement(complete_graph(4)).order(), 4u);
  EXPECT_TRUE(isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  EXPECT_TRUE(oracle::isomorphic(oracle::matrix(complement(cycle_graph(5))), oracle::matrix(cycle_graph(5))));
}

TEST(Graph, DegreeExamples) {
  EXPECT_EQ(min_degree(complete_graph(5)), 4u);
  EXPECT_EQ(max_degree(complete_bipartite(1, 3)), 3u);
  EXPECT_EQ(min_degree(disjoint_union(complete_graph(5), complete_graph(5))), 4u);
  EXPECT_THROW(degree(complete_graph(3), 3), std::out_of_range);
}

TEST(Graph, InducedAndUnion) {
  std::vector<Vertex> keep{1, 3, 4};
  EXPECT_EQ(induced_subgraph(complete_graph(5), keep), complete_graph(3));
  Graph u = disjoint_union(complete_graph(3), complete_graph(3));
  EXPECT_EQ(u.order(), 6u);
  EXPECT_EQ(u.edge_count(), 6u);
  EXPECT_FALSE(is_connected(u));
  std::vector<Vertex> bad{0, 7};
  EXPECT_THROW(induced_subgraph(u, bad), GraphError);
}

TEST(Graph, InducedRelabelsAscending) {
  Graph p = path_graph(5);  // 0-1-2-3-4
  std::vector<Vertex> keep{4, 3, 1};
  Graph s = induced_subgraph(p, keep);
  EXPECT_EQ(s, Graph::build(3, {{1, 2}}));  // 1->0, 3->1, 4->2
}

TEST(GraphProperty, RandomGraphsInvariants) {
  std::mt19937 rng(12345);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + rng() % 14;
    Graph g = oracle::random_graph(n, 0.1 + 0.8 * (rng() % 100) / 100.0, rng);
    Graph h = oracle::random_graph(1 + rng() % 6, 0.5, rng);
    EXPECT_EQ(complement(complement(g)), g);
    std::size_t sum = 0;
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_EQ(g.degree(v) + complement(g).degree(v), n - 1);
      EXPECT_FALSE(g.adjacent(v, v));
      for (Vertex w = 0; w < n; ++w) EXPECT_EQ(g.adjacent(v, w), g.adjacent(w, v));
      sum += g.degree(v);
    }
    EXPECT_EQ(sum, 2 * g.edge_count());
    Graph u = disjoint_union(g, h);
    EXPECT_EQ(u.order(), g.order() + h.order());
    EXPECT_EQ(u.edge_count(), g.edge_count() + h.edge_count());
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(Graph::build(1, {})), "@");
  EXPECT_EQ(to_graph6(Graph::build(0, {})), "?");
  EXPECT_EQ(from_graph6("C~"), complete_graph(4));
  EXPECT_EQ(from_graph6(">>graph6<<C~\n"), complete_graph(4));
}

TEST(Graph6, LongForm) {
  Graph g = path_graph(63);
  std::string s = to_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(from_graph6(s), g);
  Graph big = cycle_graph(300);
  EXPECT_EQ(from_graph6(to_graph6(big)), big);
}

TEST(Graph6, ParseErrors) {
  EXPECT_THROW(from_graph6(""), Graph6Error);
  EXPECT_THROW(from_graph6("C"), Graph6Error);     // truncated
  EXPECT_THROW(from_graph6("C~~"), Graph6Error);   // trailing
  EXPECT_THROW(from_graph6("C\x7f"), Graph6Error);  // out of range byte
  EXPECT_THROW(from_graph6("~?"), Graph6Error);    // truncated long header
}

TEST(Graph6, RoundTripEnumerated) {
  EnumerationOptions o;
  for (std::size_t n = 1; n <= 8; ++n) {
    Enumerator(n, 0, o).visit_all([&](const Graph& g) {
      EXPECT_EQ(from_graph6(to_graph6(g)), g);
      return true;
    });
  }
}
