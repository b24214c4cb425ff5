#include <gtest/gtest.h>

#include <random>

#include "csr/constructions.hpp"
#include "csr/structure.hpp"
#include "csr/validate.hpp"

using namespace csr;

TEST(Params, Derivation) {
  auto p = ParamTriple::make(10, 36);
  EXPECT_EQ(p.t(), 2u);
  EXPECT_EQ(p.k(), 1u);
  EXPECT_EQ(p.m(), 18u);
  EXPECT_THROW(ParamTriple::make(1, 5), std::invalid_argument);
  EXPECT_THROW(ParamTriple::make(3, 1), std::invalid_argument);
}

TEST(Params, FormulaExamples) {
  EXPECT_EQ(f_t(ParamTriple::make(10, 20)), 38u);
  EXPECT_EQ(f_t(ParamTriple::make(10, 36)), 53u);
  EXPECT_EQ(f_t(ParamTriple::make(3, 6)), 10u);
  EXPECT_EQ(regime(ParamTriple::make(10, 20)), Regime::clique_dominated);
  EXPECT_EQ(regime(ParamTriple::make(10, 36)), Regime::star_dominated);
}

TEST(Params, ClosedForms) {
  EXPECT_EQ(closed_form_value(ParamTriple::make(2, 2)), 4u);
  EXPECT_EQ(closed_form_value(ParamTriple::make(5, 3)), 10u);
  EXPECT_EQ(closed_form_value(ParamTriple::make(3, 4)), 8u);
  EXPECT_EQ(closed_form_value(ParamTriple::make(4, 8)), 15u);
  EXPECT_FALSE(closed_form_value(ParamTriple::make(3, 20)).has_value());
}

// Largest n - 1 with n - 1 < t(t(2ell-1) - 1)/(t + 1) that is still
// admissible for t lies in the clique-dominated regime.
TEST(Params, RegimeBoundary) {
  for (std::size_t t = 2; t <= 6; ++t)
    for (std::size_t ell = 2; ell <= 30; ++ell) {
      const std::size_t c = 2 * ell - 1;
      const std::size_t num = t * (t * c - 1);
      std::size_t x = (num - 1) / (t + 1);
      if (x < (t - 1) * c || x >= t * c) continue;
      auto p = ParamTriple::make(ell, x + 1);
      ASSERT_EQ(p.t(), t);
      EXPECT_EQ(regime(p), Regime::clique_dominated) << "t=" << t << " ell=" << ell;
    }
}

TEST(ParamsProperty, InvariantsOnRandomGridAndBoundaries) {
  std::mt19937 rng(17);
  auto check = [](std::size_t ell, std::size_t n) {
    auto p = ParamTriple::make(ell, n);
    const std::size_t c = 2 * ell - 1, t = p.t(), k = p.k(), m = p.m();
    EXPECT_LE((t - 1) * c, n - 1);
    EXPECT_LT(n - 1, t * c);
    EXPECT_LT(k, t);
    EXPECT_GE(m, 1u);
    EXPECT_EQ(k * m + (t + 1 - k) * (m - 1) + 1, n + (n - 1) / t);
    EXPECT_EQ(f_t(p), std::max(t * c, n + (n - 1) / t));
  };
  for (int i = 0; i < 2000; ++i) check(2 + rng() % 40, 2 + rng() % 400);
  for (std::size_t ell = 2; ell <= 12; ++ell)
    for (std::size_t t = 1; t <= 6; ++t) {
      const std::size_t c = 2 * ell - 1;
      if ((t - 1) * c + 1 >= 2) check(ell, (t - 1) * c + 1);
      check(ell, t * c);
    }
}

TEST(Constructions, H1) {
  auto p = ParamTriple::make(3, 6);
  Graph h1 = build_h1(p);
  EXPECT_EQ(h1, disjoint_union(complete_graph(5), complete_graph(5)));
  EXPECT_EQ(max_degree(complement(h1)), (p.t() - 1) * p.clique_order());
  for (std::size_t ell = 2; ell <= 5; ++ell)
    for (std::size_t n = 2; n <= 3 * (2 * ell - 1); ++n) {
      auto q = ParamTriple::make(ell, n);
      EXPECT_TRUE(find_cycle_of_length(build_h1(q), 2 * ell).absent());
    }
}

TEST(Constructions, H2) {
  auto p = ParamTriple::make(10, 36);
  Graph h2 = build_h2(p);
  EXPECT_EQ(h2.order(), 53u);
  EXPECT_EQ(max_degree(complement(h2)), p.n() - 1);
  EXPECT_TRUE(is_connected(build_h2(ParamTriple::make(3, 5))));  // k = 0
  for (const auto& b : blocks(h2).blocks) EXPECT_LE(b.size(), p.clique_order());
}

TEST(Constructions, H2Layout) {
  // ell=3, n=6: t=2, k=1, m=3; two triangles on hub 0, then one disjoint triangle.
  Graph h2 = build_h2(ParamTriple::make(3, 6));
  Graph want = Graph::build(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {5, 6}, {5, 7}, {6, 7}});
  EXPECT_EQ(h2, want);
}

TEST(Certify, Examples) {
  auto p = ParamTriple::make(3, 6);
  auto r = certify_lower_bound(build_h1(p), p);
  EXPECT_EQ(r.certified_bound, 11u);
  EXPECT_EQ(r.status(), CertStatus::certified);

  auto k6 = certify_lower_bound(complete_graph(6), p);
  EXPECT_FALSE(k6.cycle_free());
  ASSERT_TRUE(k6.cycle_witness);
  EXPECT_FALSE(validate::cycle(complete_graph(6), k6.cycle_witness->vertices, 6));
  EXPECT_EQ(k6.status(), CertStatus::refuted);

  std::vector<std::size_t> sizes{4, 4};
  auto q = ParamTriple::make(3, 4);
  EXPECT_EQ(certify_lower_bound(cliques_sharing_vertex(sizes), q).certified_bound, 8u);

  Graph empty = Graph::build(5, {});
  auto e = certify_lower_bound(empty, ParamTriple::make(3, 3));
  ASSERT_TRUE(e.star_witness);
  EXPECT_FALSE(validate::complement_star(empty, e.star_witness->center, e.star_witness->leaves, 3));
}

TEST(Certify, ExhaustedSearchIsIndeterminate) {
  auto p = ParamTriple::make(5, 3);
  auto r = certify_lower_bound(petersen_graph(), p, SearchBudget{3});
  EXPECT_EQ(r.cycle_search, SearchStatus::exhausted);
  EXPECT_FALSE(r.certified_bound);
}

TEST(ConstructionsProperty, SmallGridCertifies) {
  for (std::size_t ell = 2; ell <= 4; ++ell)
    for (std::size_t n = 2; n <= 4 * (2 * ell - 1); ++n) {
      auto p = ParamTriple::make(ell, n);
      Graph h1 = build_h1(p), h2 = build_h2(p);
      EXPECT_EQ(h1.order(), p.t() * p.clique_order());
      EXPECT_EQ(h2.order(), n + (n - 1) / p.t());
      EXPECT_EQ(certify_lower_bound(h1, p).status(), CertStatus::certified);
      EXPECT_EQ(certify_lower_bound(h2, p).status(), CertStatus::certified);
      EXPECT_EQ(f_t(p), std::max(h1.order(), h2.order()));
    }
}
