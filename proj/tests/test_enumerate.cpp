#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "csr/canonical.hpp"
#include "csr/enumerate.hpp"
#include "csr/graph6.hpp"
#include "oracles.hpp"

using namespace csr;

TEST(Canonical, RelabelledGraphsShareForm) {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + rng() % 12;
    Graph g = oracle::random_graph(n, 0.5, rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(to_small(g)), canonical_form(to_small(oracle::relabel(g, perm))));
    EXPECT_TRUE(isomorphic(g, oracle::relabel(g, perm)));
  }
}

TEST(Canonical, DistinguishesLikeOracle) {
  std::mt19937 rng(4);
  for (int iter = 0; iter < 300; ++iter) {
    Graph a = oracle::random_graph(6, 0.5, rng), b = oracle::random_graph(6, 0.5, rng);
    EXPECT_EQ(isomorphic(a, b), oracle::isomorphic(oracle::matrix(a), oracle::matrix(b)));
  }
}

TEST(Canonical, OrbitsAreAutomorphismOrbits) {
  std::mt19937 rng(6);
  for (int iter = 0; iter < 80; ++iter) {
    Graph g = oracle::random_graph(6, 0.4, rng);
    auto lab = canonical_labeling(to_small(g));
    // Vertices u, v share an orbit iff some automorphism maps u to v.
    std::vector<std::size_t> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::pair<std::size_t, std::size_t>> related;
    do {
      if (oracle::relabel(g, perm) == g)
        for (std::size_t v = 0; v < 6; ++v) related.emplace(v, perm[v]);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t u = 0; u < 6; ++u)
      for (std::size_t v = 0; v < 6; ++v)
        EXPECT_EQ(lab.orbit[u] == lab.orbit[v], related.count({u, v}) == 1) << to_graph6(g) << " " << u << "," << v;
  }
}

TEST(Canonical, SymmetricGraphs) {
  auto lab = canonical_labeling(to_small(petersen_graph()));
  for (int v = 0; v < 10; ++v) EXPECT_EQ(lab.orbit[v], 0);
  auto k33 = canonical_labeling(to_small(complete_bipartite(3, 3)));
  for (int v = 0; v < 6; ++v) EXPECT_EQ(k33.orbit[v], 0);
}

TEST(Enumerate, SmallExamples) {
  EXPECT_EQ(count_graphs(4, 0), 11u);
  auto k3 = enumerate_graphs(3, 2);
  ASSERT_EQ(k3.size(), 1u);
  EXPECT_EQ(k3[0], complete_graph(3));
  auto k5 = enumerate_graphs(5, 4);
  ASSERT_EQ(k5.size(), 1u);
  EXPECT_EQ(k5[0], complete_graph(5));
  EXPECT_TRUE(enumerate_graphs(4, 4).empty());
  EXPECT_EQ(count_graphs(1, 0), 1u);
}

TEST(EnumerateOracle, CountsMatchLabelledBruteForce) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t d = 0; d < n; ++d) EXPECT_EQ(count_graphs(n, d), oracle::count_classes(n, d)) << n << "," << d;
}

TEST(Enumerate, CountsToSeven) {
  const std::size_t want[] = {1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(count_graphs(n, 0), want[n - 1]);
}

TEST(EnumerateProperty, PairwiseNonIsomorphicAndFiltered) {
  for (std::size_t n = 5; n <= 7; ++n)
    for (std::size_t d : {0u, 2u, 3u}) {
      std::set<std::string> forms;
      auto all = enumerate_graphs(n, d);
      for (const auto& g : all) {
        EXPECT_GE(min_degree(g), d);
        forms.insert(to_graph6(to_graph(canonical_form(to_small(g)))));
      }
      EXPECT_EQ(forms.size(), all.size());
    }
}

TEST(Enumerate, DeterministicAcrossWorkers) {
  EnumerationOptions one, many;
  many.workers = 8;
  auto a = enumerate_graphs(7, 2, one), b = enumerate_graphs(7, 2, many);
  EXPECT_EQ(a, b);
}

TEST(Enumerate, Ceiling) {
  EXPECT_THROW(Enumerator(11, 0), CeilingError);
  EnumerationOptions o;
  o.ceiling = 5;
  EXPECT_THROW(Enumerator(6, 0, o), CeilingError);
  o.allow_above_ceiling = true;
  EXPECT_EQ(Enumerator(6, 4, o).subtree_count() > 0, true);
  EnumerationOptions big;
  big.allow_above_ceiling = true;
  EXPECT_THROW(Enumerator(40, 0, big), CeilingError);
}

TEST(Enumerate, CeilingFromEnvironment) {
  ::setenv("CSR_ENUM_CEILING", "6", 1);
  EXPECT_EQ(default_enumeration_ceiling(), 6u);
  EXPECT_THROW(Enumerator(7, 0), CeilingError);
  ::setenv("CSR_ENUM_CEILING", "junk", 1);
  EXPECT_EQ(default_enumeration_ceiling(), builtin_enumeration_ceiling);
  ::unsetenv("CSR_ENUM_CEILING");
}
