#ifndef CSR_SEARCH_HPP
#define CSR_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "csr/constructions.hpp"
#include "csr/cycles.hpp"
#include "csr/enumerate.hpp"
#include "csr/graph.hpp"

namespace csr {

struct SearchOptions {
  EnumerationOptions enumeration;
  SearchBudget cycle_budget;       // per graph
  std::uint64_t max_classes = 0;   // 0: unlimited
  std::optional<std::string> resume_token;
};

enum class Verdict { pass, fail, indeterminate };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::indeterminate: return "INDETERMINATE";
  }
  return "?";
}

// Outcome of checking that every graph of a given order and minimum degree
// >= order - n contains C_{2ell}.
struct UpperVerdict {
  Verdict verdict = Verdict::indeterminate;
  std::size_t order = 0, ell = 0, n = 0;
  std::uint64_t classes_examined = 0;   // in this run, from the resume point on
  std::size_t subtrees_total = 0;
  std::size_t subtrees_done = 0;
  std::optional<Graph> counterexample;  // FAIL: a C_{2ell}-free graph with min degree >= order - n
  std::optional<std::string> resume_token;  // INDETERMINATE: where to pick up
  std::string reason;
};

namespace detail {

inline std::string make_resume_token(std::size_t order, std::size_t ell, std::size_t n, std::size_t subtree) {
  return "csr1-" + std::to_string(order) + "-" + std::to_string(ell) + "-" + std::to_string(n) + "-" +
         std::to_string(subtree);
}

// Returns the subtree index encoded in `token`, checking it belongs to the
// same query.
inline std::size_t parse_resume_token(const std::string& token, std::size_t order, std::size_t ell, std::size_t n) {
  std::istringstream in(token);
  std::string tag;
  std::size_t o = 0, l = 0, s = 0, idx = 0;
  char d1 = 0, d2 = 0, d3 = 0;
  std::getline(in, tag, '-');
  in >> o >> d1 >> l >> d2 >> s >> d3 >> idx;
  if (tag != "csr1" || !in || d1 != '-' || d2 != '-' || d3 != '-')
    throw std::invalid_argument("malformed resume token: " + token);
  if (o != order || l != ell || s != n) throw std::invalid_argument("resume token belongs to a different query");
  return idx;
}

}  // namespace detail

// Per-subtree partial result, folded in subtree order so that the outcome is
// the same for every worker count.
inline UpperVerdict verify_upper_at(std::size_t order, std::size_t ell, std::size_t n, const SearchOptions& opts = {}) {
  UpperVerdict out;
  out.order = order;
  out.ell = ell;
  out.n = n;
  const std::size_t min_deg = order > n ? order - n : 0;
  Enumerator en(order, min_deg, opts.enumeration);
  out.subtrees_total = en.subtree_count();
  std::size_t start = 0;
  if (opts.resume_token) start = detail::parse_resume_token(*opts.resume_token, order, ell, n);
  if (start > en.subtree_count()) throw std::invalid_argument("resume token points past the enumeration");

  struct Partial {
    std::uint64_t examined = 0;
    std::optional<Graph> counterexample;
    bool exhausted = false;
  };

  const std::size_t chunk = std::max<std::size_t>(1, 4 * std::max(1U, opts.enumeration.workers));
  std::uint64_t examined = 0;
  std::size_t idx = start;
  while (idx < en.subtree_count()) {
    const std::size_t hi = std::min(en.subtree_count(), idx + chunk);
    std::vector<Partial> parts(hi - idx);
    parallel_for(parts.size(), opts.enumeration.workers, [&](std::size_t j) {
      Partial& p = parts[j];
      en.visit_subtree(idx + j, [&](const Graph& g) {
        ++p.examined;
        auto r = find_cycle_of_length(g, 2 * ell, opts.cycle_budget);
        if (r.absent()) {
          p.counterexample = g;
          return false;
        }
        if (r.exhausted()) {
          p.exhausted = true;
          return false;
        }
        return true;
      });
    });
    for (std::size_t j = 0; j < parts.size(); ++j) {
      auto& p = parts[j];
      examined += p.examined;
      out.classes_examined = examined;
      if (p.counterexample) {
        out.verdict = Verdict::fail;
        out.counterexample = std::move(p.counterexample);
        out.subtrees_done = idx + j + 1;
        return out;
      }
      if (p.exhausted) {
        out.verdict = Verdict::indeterminate;
        out.reason = "cycle search budget exhausted";
        out.subtrees_done = idx + j;
        out.resume_token = detail::make_resume_token(order, ell, n, idx + j);
        return out;
      }
      if (opts.max_classes != 0 && examined >= opts.max_classes && idx + j + 1 < en.subtree_count()) {
        out.verdict = Verdict::indeterminate;
        out.reason = "class budget exhausted";
        out.subtrees_done = idx + j + 1;
        out.resume_token = detail::make_resume_token(order, ell, n, idx + j + 1);
        return out;
      }
    }
    idx = hi;
  }
  out.subtrees_done = en.subtree_count();
  out.verdict = Verdict::pass;
  return out;
}

struct RamseyResult {
  std::size_t ell = 0, n = 0;
  bool final = false;
  std::optional<std::size_t> value;  // set iff final
  std::size_t lo = 0;                // R >= lo
  std::optional<std::size_t> hi;     // R <= hi when known
  Graph lower_witness;               // order lo - 1, certified
  std::string lower_source;          // "h1", "h2" or "enumeration"
  // Upper side: the verification at the final order (or where it stopped).
  std::size_t upper_order = 0;
  std::uint64_t upper_classes = 0;
  Verdict upper_verdict = Verdict::indeterminate;
  std::string note;
};

// Exact R(C_{2ell}, K_{1,n}) by upward search: start just above the larger
// certified construction, then verify each order by exhaustive enumeration.
// Orders above the enumeration ceiling, or an exhausted budget, give a
// bracketing result with final == false.
inline RamseyResult ramsey_number(std::size_t ell, std::size_t n, const SearchOptions& opts = {}) {
  const ParamTriple p = ParamTriple::make(ell, n);
  RamseyResult res;
  res.ell = ell;
  res.n = n;

  Graph h1 = build_h1(p), h2 = build_h2(p);
  auto r1 = certify_lower_bound(h1, p, opts.cycle_budget);
  auto r2 = certify_lower_bound(h2, p, opts.cycle_budget);
  if (r1.status() != CertStatus::certified || r2.status() != CertStatus::certified)
    throw InternalError("ramsey_number: a lower-bound construction failed certification");
  if (h2.order() > h1.order()) {
    res.lower_witness = h2;
    res.lower_source = "h2";
  } else {
    res.lower_witness = h1;
    res.lower_source = "h1";
  }
  res.lo = res.lower_witness.order() + 1;

  const std::size_t ceiling =
      opts.enumeration.ceiling == 0 ? default_enumeration_ceiling() : opts.enumeration.ceiling;
  const std::size_t first_order = res.lo;
  for (std::size_t order = first_order;; ++order) {
    res.upper_order = order;
    if (order > ceiling && !opts.enumeration.allow_above_ceiling) {
      res.note = "order " + std::to_string(order) + " exceeds the enumeration ceiling " + std::to_string(ceiling);
      return res;
    }
    SearchOptions step = opts;
    if (order != first_order) step.resume_token.reset();
    auto v = verify_upper_at(order, ell, n, step);
    res.upper_classes = v.classes_examined;
    res.upper_verdict = v.verdict;
    if (v.verdict == Verdict::pass) {
      res.final = true;
      res.value = order;
      res.hi = order;
      return res;
    }
    if (v.verdict == Verdict::indeterminate) {
      res.note = v.reason + " at order " + std::to_string(order);
      return res;
    }
    res.lower_witness = std::move(*v.counterexample);
    res.lower_source = "enumeration";
    res.lo = order + 1;
  }
}

enum class CycleBound { exact_2ell, at_least_2ell };

inline const char* to_string(CycleBound m) {
  return m == CycleBound::exact_2ell ? "exact_2ell" : "at_least_2ell";
}

struct TuranResult {
  std::size_t order = 0, ell = 0;
  CycleBound mode = CycleBound::exact_2ell;
  std::size_t max_edges = 0;
  std::vector<Graph> extremal_examples;  // one per isomorphism class attaining max_edges
};

// True when g avoids the forbidden cycles: C_{2ell}, or every cycle of length >= 2ell.
inline bool avoids(const Graph& g, std::size_t ell, CycleBound mode, SearchBudget budget = {}) {
  SearchStatus s = mode == CycleBound::exact_2ell ? find_cycle_of_length(g, 2 * ell, budget).status
                                                 : has_cycle_at_least(g, 2 * ell, budget);
  if (s == SearchStatus::exhausted) throw std::runtime_error("turan: cycle search budget exhausted");
  return s == SearchStatus::absent;
}

// ex(order, C_{2ell}) or ex(order, C_{>=2ell}) by exhaustive enumeration.
inline TuranResult turan_number(std::size_t order, std::size_t ell, CycleBound mode, const SearchOptions& opts = {}) {
  if (ell < 2) throw std::invalid_argument("turan_number: ell must be >= 2");
  Enumerator en(order, 0, opts.enumeration);
  auto edges = en.map([&](const Graph& g) -> long {
    return avoids(g, ell, mode, opts.cycle_budget) ? static_cast<long>(g.edge_count()) : -1L;
  });
  TuranResult out;
  out.order = order;
  out.ell = ell;
  out.mode = mode;
  long best = 0;
  for (long e : edges) best = std::max(best, e);
  out.max_edges = static_cast<std::size_t>(best);
  std::size_t i = 0;
  en.visit_all([&](const Graph& g) {
    if (edges[i++] == best) out.extremal_examples.push_back(g);
    return true;
  });
  return out;
}

}  // namespace csr

#endif  // CSR_SEARCH_HPP
