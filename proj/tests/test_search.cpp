#include <gtest/gtest.h>

#include "csr/search.hpp"
#include "oracles.hpp"

using namespace csr;

TEST(Ramsey, ClosedFormValues) {
  EXPECT_EQ(ramsey_number(2, 2).value, 4u);
  EXPECT_EQ(ramsey_number(3, 3).value, 6u);
  EXPECT_EQ(ramsey_number(2, 3).value, 6u);
  auto r = ramsey_number(3, 4);
  ASSERT_TRUE(r.final);
  EXPECT_EQ(r.value, 8u);
  EXPECT_EQ(r.lower_witness.order() + 1, *r.value);
  EXPECT_EQ(certify_lower_bound(r.lower_witness, ParamTriple::make(3, 4)).status(), CertStatus::certified);
}

TEST(Ramsey, AboveCeilingBrackets) {
  auto r = ramsey_number(4, 8);
  EXPECT_FALSE(r.final);
  EXPECT_FALSE(r.value);
  EXPECT_EQ(r.lo, 15u);
  EXPECT_FALSE(r.hi);
  EXPECT_EQ(r.upper_verdict, Verdict::indeterminate);
}

TEST(Ramsey, MonotoneInN) {
  for (std::size_t ell = 2; ell <= 3; ++ell) {
    std::size_t prev = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
      auto r = ramsey_number(ell, n);
      ASSERT_TRUE(r.final);
      EXPECT_GE(*r.value, prev);
      prev = *r.value;
    }
  }
}

// For small ell the formula can undershoot: the Petersen
// graph (order 10, min degree 3 = 10 - 7, girth 5) shows R(C4, K_{1,7}) > 10
// while f_t + 1 = 10.
TEST(Ramsey, PetersenBeatsFormulaAtSmallEll) {
  auto p = ParamTriple::make(2, 7);
  EXPECT_EQ(f_t(p) + 1, 10u);
  EXPECT_EQ(certify_lower_bound(petersen_graph(), p).certified_bound, 11u);
}

TEST(VerifyUpper, Examples) {
  EXPECT_EQ(verify_upper_at(8, 3, 4).verdict, Verdict::pass);
  EXPECT_EQ(verify_upper_at(4, 2, 2).verdict, Verdict::pass);
  auto f = verify_upper_at(7, 3, 4);
  ASSERT_EQ(f.verdict, Verdict::fail);
  ASSERT_TRUE(f.counterexample);
  EXPECT_EQ(certify_lower_bound(*f.counterexample, ParamTriple::make(3, 4)).status(), CertStatus::certified);
}

TEST(VerifyUpper, FailWitnessesCertify) {
  for (std::size_t ell = 2; ell <= 3; ++ell)
    for (std::size_t n = 2; n <= 5; ++n)
      for (std::size_t order = 3; order <= 8; ++order) {
        auto v = verify_upper_at(order, ell, n);
        if (v.verdict != Verdict::fail) continue;
        EXPECT_GE(min_degree(*v.counterexample) + n, order);
        EXPECT_EQ(certify_lower_bound(*v.counterexample, ParamTriple::make(ell, n)).status(), CertStatus::certified);
      }
}

TEST(VerifyUpper, ResumeCoversTheRest) {
  SearchOptions capped;
  capped.max_classes = 50;
  auto first = verify_upper_at(8, 3, 4, capped);
  ASSERT_EQ(first.verdict, Verdict::indeterminate);
  ASSERT_TRUE(first.resume_token);
  std::uint64_t total = first.classes_examined;
  SearchOptions rest;
  rest.resume_token = first.resume_token;
  auto second = verify_upper_at(8, 3, 4, rest);
  EXPECT_EQ(second.verdict, Verdict::pass);
  total += second.classes_examined;
  EXPECT_EQ(total, verify_upper_at(8, 3, 4).classes_examined);
  EXPECT_THROW(verify_upper_at(8, 3, 5, rest), std::invalid_argument);
  SearchOptions junk;
  junk.resume_token = "nonsense";
  EXPECT_THROW(verify_upper_at(8, 3, 4, junk), std::invalid_argument);
}

TEST(VerifyUpper, CycleBudgetGivesIndeterminate) {
  SearchOptions o;
  o.cycle_budget = SearchBudget{1};
  auto v = verify_upper_at(8, 3, 4, o);
  EXPECT_EQ(v.verdict, Verdict::indeterminate);
  EXPECT_TRUE(v.resume_token);
}

TEST(VerifyUpper, WorkerCountDoesNotMatter) {
  SearchOptions one, eight;
  eight.enumeration.workers = 8;
  auto a = verify_upper_at(7, 3, 4, one), b = verify_upper_at(7, 3, 4, eight);
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_EQ(a.classes_examined, b.classes_examined);
  EXPECT_EQ(a.counterexample, b.counterexample);
}

namespace {

// Brute force over all labelled graphs on n <= 6 vertices.
std::size_t turan_oracle(std::size_t n, std::size_t ell, bool at_least) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    const auto edges = static_cast<std::size_t>(std::popcount(mask));
    if (edges <= best) continue;
    oracle::Matrix a(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) a[slots[s].first][slots[s].second] = a[slots[s].second][slots[s].first] = true;
    bool bad = false;
    for (std::size_t k = 2 * ell; k <= (at_least ? n : 2 * ell) && !bad; ++k) bad = oracle::has_cycle(a, k);
    if (!bad) best = edges;
  }
  return best;
}

}  // namespace

TEST(Turan, Examples) {
  EXPECT_EQ(turan_number(5, 3, CycleBound::at_least_2ell).max_edges, 10u);
  auto t7 = turan_number(7, 2, CycleBound::at_least_2ell);
  EXPECT_EQ(t7.max_edges, 9u);
  for (const auto& g : t7.extremal_examples) {
    EXPECT_EQ(g.edge_count(), 9u);
    for (const auto& b : blocks(g).blocks) EXPECT_EQ(b.size(), 3u);
  }
  EXPECT_EQ(turan_number(4, 2, CycleBound::exact_2ell).max_edges, turan_oracle(4, 2, false));
}

TEST(TuranOracle, AgreesWithBruteForce) {
  for (std::size_t n = 4; n <= 6; ++n)
    for (std::size_t ell = 2; 2 * ell <= n; ++ell)
      for (bool at_least : {false, true}) {
        auto t = turan_number(n, ell, at_least ? CycleBound::at_least_2ell : CycleBound::exact_2ell);
        EXPECT_EQ(t.max_edges, turan_oracle(n, ell, at_least)) << n << " " << ell << " " << at_least;
        for (const auto& g : t.extremal_examples) {
          EXPECT_EQ(g.edge_count(), t.max_edges);
          EXPECT_TRUE(avoids(g, ell, t.mode));
        }
      }
}

TEST(TuranProperty, ErdosGallaiBound) {
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t ell = 2; ell <= 3; ++ell) {
      auto t = turan_number(n, ell, CycleBound::at_least_2ell);
      EXPECT_LE(2 * t.max_edges, (2 * ell - 1) * (n - 1)) << n << " " << ell;
    }
}

TEST(Turan, Ceiling) { EXPECT_THROW(turan_number(11, 2, CycleBound::exact_2ell), CeilingError); }
