#ifndef CSR_HARNESS_HPP
#define CSR_HARNESS_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csr/constructions.hpp"
#include "csr/cycles.hpp"
#include "csr/enumerate.hpp"
#include "csr/graph6.hpp"
#include "csr/search.hpp"
#include "csr/structure.hpp"
#include "csr/validate.hpp"

namespace csr {

enum class LemmaId { vz, bc, williamson, dec, set_system, theorem_probe, erdos_gallai };

inline const char* to_string(LemmaId id) {
  switch (id) {
    case LemmaId::vz: return "vz";
    case LemmaId::bc: return "bc";
    case LemmaId::williamson: return "williamson";
    case LemmaId::dec: return "dec";
    case LemmaId::set_system: return "set_system";
    case LemmaId::theorem_probe: return "theorem_probe";
    case LemmaId::erdos_gallai: return "erdos_gallai";
  }
  return "?";
}

inline std::optional<LemmaId> lemma_from_string(const std::string& s) {
  for (auto id : {LemmaId::vz, LemmaId::bc, LemmaId::williamson, LemmaId::dec, LemmaId::set_system,
                  LemmaId::theorem_probe, LemmaId::erdos_gallai})
    if (s == to_string(id)) return id;
  return std::nullopt;
}

struct LemmaFailure {
  std::string graph6;  // empty for the set-system lemma
  std::string detail;
  bool operator==(const LemmaFailure&) const = default;
};

// One row of the small-scale probe of R = f_t + 1.
struct ProbeRow {
  std::size_t ell = 0, n = 0, t = 0, f = 0;
  std::optional<std::size_t> closed_form;  // classical small-regime value, if any
  bool final = false;
  std::size_t lo = 0;                      // computed value when final
  std::optional<std::size_t> hi;
  std::optional<bool> matches_formula;     // value == f_t + 1, when final
  std::optional<bool> matches_closed_form;
  bool operator==(const ProbeRow&) const = default;
};

struct LemmaReport {
  LemmaId lemma = LemmaId::vz;
  std::uint64_t instances_checked = 0;
  std::vector<LemmaFailure> failures;
  std::vector<std::pair<std::string, long long>> scope;  // bounds used, in a fixed order
  std::vector<ProbeRow> probe;                           // theorem_probe only

  bool ok() const { return failures.empty(); }
  bool operator==(const LemmaReport&) const = default;
};

struct HarnessOptions {
  unsigned workers = 1;
  SearchBudget cycle_budget;
  std::size_t ceiling = 0;
};

namespace detail {

inline EnumerationOptions enum_opts(const HarnessOptions& o) {
  EnumerationOptions e;
  e.workers = o.workers;
  e.ceiling = o.ceiling;
  return e;
}

using MaybeFailure = std::optional<LemmaFailure>;

template <class Check>
void sweep(LemmaReport& rep, std::size_t order, std::size_t min_deg, const HarnessOptions& o, Check&& check) {
  if (min_deg >= order && order > 0) return;
  Enumerator en(order, min_deg, enum_opts(o));
  auto results = en.map([&](const Graph& g) -> std::pair<bool, MaybeFailure> { return check(g); });
  for (auto& [counted, failure] : results) {
    if (counted) ++rep.instances_checked;
    if (failure) rep.failures.push_back(std::move(*failure));
  }
}

inline LemmaFailure failure(const Graph& g, std::string what) { return {to_graph6(g), std::move(what)}; }

}  // namespace detail

// Every 2-connected graph has an even cycle of length >= min(2 delta, order-1),
// odd cycles excepted: they are 2-connected with no even cycle at all. Any
// other 2-connected graph with delta = 2 contains a theta subgraph, hence an
// even cycle, so the exemption is exactly the odd cycles and is counted in
// the scope as exempt_odd_cycles.
inline LemmaReport verify_vz(std::size_t max_order, const HarnessOptions& o = {}) {
  LemmaReport rep;
  rep.lemma = LemmaId::vz;
  long long exempt = 0;
  for (std::size_t order = 3; order <= max_order; ++order)
    detail::sweep(rep, order, 2, o, [&](const Graph& g) -> std::pair<bool, detail::MaybeFailure> {
      if (!is_2connected(g)) return {false, std::nullopt};
      if (g.order() % 2 == 1 && g.edge_count() == g.order()) return {false, std::nullopt};
      auto ec = longest_even_cycle_with_witness(g, o.cycle_budget);
      const std::size_t bound = std::min(2 * min_degree(g), g.order() - 1);
      if (ec.exhausted) return {true, detail::failure(g, "search budget exhausted")};
      if (ec.length < bound)
        return {true, detail::failure(g, "ec = " + std::to_string(ec.length) + " < " + std::to_string(bound))};
      if (ec.witness && validate::cycle(g, ec.witness->vertices, ec.length))
        return {true, detail::failure(g, "invalid even-cycle witness")};
      return {true, std::nullopt};
    });
  for (std::size_t order = 3; order <= max_order; order += 2) ++exempt;
  rep.scope = {{"min_order", 3}, {"max_order", static_cast<long long>(max_order)}, {"exempt_odd_cycles", exempt}};
  return rep;
}

// g is hamiltonian iff its Bondy-Chvatal closure is.
inline LemmaReport verify_bc(std::size_t max_order, const HarnessOptions& o = {}) {
  LemmaReport rep;
  rep.lemma = LemmaId::bc;
  rep.scope = {{"min_order", 3}, {"max_order", static_cast<long long>(max_order)}};
  for (std::size_t order = 3; order <= max_order; ++order)
    detail::sweep(rep, order, 0, o, [&](const Graph& g) -> std::pair<bool, detail::MaybeFailure> {
      auto a = is_hamiltonian(g, o.cycle_budget);
      auto b = is_hamiltonian(bc_closure(g), o.cycle_budget);
      if (a.exhausted() || b.exhausted()) return {true, detail::failure(g, "search budget exhausted")};
      if (a.found() != b.found())
        return {true, detail::failure(g, std::string("hamiltonian ") + (a.found() ? "yes" : "no") +
                                             " but closure hamiltonian " + (b.found() ? "yes" : "no"))};
      return {true, std::nullopt};
    });
  return rep;
}

// delta >= order/2 + 1 gives v-w paths of every length 2..order-1.
inline LemmaReport verify_williamson(std::size_t max_order, const HarnessOptions& o = {}) {
  LemmaReport rep;
  rep.lemma = LemmaId::williamson;
  rep.scope = {{"min_order", 3}, {"max_order", static_cast<long long>(max_order)}};
  for (std::size_t order = 3; order <= max_order; ++order) {
    const std::size_t min_deg = (order + 3) / 2;  // ceil(order/2 + 1)
    detail::sweep(rep, order, min_deg, o, [&](const Graph& g) -> std::pair<bool, detail::MaybeFailure> {
      for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w = v + 1; w < g.order(); ++w)
          for (std::size_t k = 2; k + 1 <= g.order(); ++k) {
            auto r = find_path_of_length(g, v, w, k, o.cycle_budget);
            std::string where = " (" + std::to_string(v) + "," + std::to_string(w) + ",k=" + std::to_string(k) + ")";
            if (!r.found()) return {true, detail::failure(g, "no path" + where)};
            if (validate::path(g, r.witness->vertices, v, w, k))
              return {true, detail::failure(g, "invalid path witness" + where)};
          }
      return {true, std::nullopt};
    });
  }
  return rep;
}

// Every in-hypothesis (g, k) decomposes into s < k 2-connected pieces after
// removing |U| <= s - 1 vertices.
inline LemmaReport verify_dec(std::size_t max_order, std::size_t k_lo, std::size_t k_hi, const HarnessOptions& o = {}) {
  LemmaReport rep;
  rep.lemma = LemmaId::dec;
  rep.scope = {{"max_order", static_cast<long long>(max_order)},
               {"k_min", static_cast<long long>(k_lo)},
               {"k_max", static_cast<long long>(k_hi)}};
  for (std::size_t order = 2; order <= max_order; ++order)
    for (std::size_t k = std::max<std::size_t>(k_lo, 2); k <= k_hi && k <= order; ++k) {
      const std::size_t min_deg = (order + k * k + k - 1) / k;  // ceil(order/k + k)
      detail::sweep(rep, order, min_deg, o, [&](const Graph& g) -> std::pair<bool, detail::MaybeFailure> {
        const std::string tag = " (k=" + std::to_string(k) + ")";
        try {
          auto d = decompose_2connected(g, k);
          if (auto p = validate::decomposition(g, d.removed, d.components)) return {true, detail::failure(g, *p + tag)};
          if (d.s() >= k) return {true, detail::failure(g, "s >= k" + tag)};
        } catch (const std::exception& e) {
          return {true, detail::failure(g, e.what() + tag)};
        }
        return {true, std::nullopt};
      });
    }
  return rep;
}

// Set-system bound, checked over size profiles. The hypotheses (i)-(iv)
// depend only on |V| and the sizes |V_i|; a profile (N; a_1..a_s) is
// realisable as a cover iff max a_i <= N <= sum a_i. Each admissible profile
// is realised by consecutive cyclic windows, the hypotheses are re-checked on
// those explicit sets, and the conclusion N <= f_t(ell, n) is tested together
// with the two intermediate inequalities of the argument.
inline LemmaReport verify_set_system(std::size_t max_v, std::size_t max_s) {
  LemmaReport rep;
  rep.lemma = LemmaId::set_system;
  rep.scope = {{"max_V", static_cast<long long>(max_v)}, {"max_s", static_cast<long long>(max_s)}};
  if (max_v > 60) throw std::invalid_argument("verify_set_system: max_V must be <= 60");

  const std::size_t ell_max = (max_v + 1) / 2 + 1;
  for (std::size_t ell = 2; ell <= ell_max; ++ell)
    for (std::size_t n = 2; n <= max_v + 1; ++n) {
      const ParamTriple p = ParamTriple::make(ell, n);
      if (p.t() < 2) continue;
      const std::size_t f = f_t(p), cap = 2 * ell - 1, t = p.t();
      for (std::size_t big_n = 1; big_n <= max_v; ++big_n)
        for (std::size_t s = 2; s <= max_s; ++s) {
          const std::size_t lo_size = big_n > n - 1 ? big_n - (n - 1) : 0;
          const std::size_t hi_size = std::min(big_n, cap);
          if (lo_size > hi_size) continue;
          std::vector<std::size_t> a(s, hi_size);
          // Non-increasing profiles a[0] >= a[1] >= ... in [lo_size, hi_size].
          while (true) {
            std::size_t sum = 0;
            for (auto x : a) sum += x;
            if (sum >= big_n && sum <= big_n + s - 1) {
              ++rep.instances_checked;
              std::vector<std::uint64_t> sets(s, 0);
              std::size_t at = 0;
              for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < a[i]; ++j, ++at) sets[i] |= std::uint64_t{1} << (at % big_n);
              const std::uint64_t ground = big_n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << big_n) - 1;
              std::uint64_t uni = 0;
              std::size_t total = 0;
              bool hyp = true;
              for (auto m : sets) {
                uni |= m;
                const auto sz = static_cast<std::size_t>(std::popcount(m));
                total += sz;
                hyp = hyp && sz <= cap && big_n - sz <= n - 1;
              }
              hyp = hyp && uni == ground && total <= big_n + s - 1;
              std::string where = "ell=" + std::to_string(ell) + " n=" + std::to_string(n) +
                                  " t=" + std::to_string(t) + " s=" + std::to_string(s) +
                                  " |V|=" + std::to_string(big_n);
              if (!hyp) {
                rep.failures.push_back({"", "realised cover violates its own profile: " + where});
              } else {
                if (big_n > f) rep.failures.push_back({"", "|V| > f_t: " + where});
                if (s <= t && big_n > t * cap) rep.failures.push_back({"", "s <= t but |V| > t(2ell-1): " + where});
                if (s >= t + 1 && (big_n - std::min(big_n, n)) * (s - 1) > n - 1)
                  rep.failures.push_back({"", "s > t but |V| > n + (n-1)/(s-1): " + where});
              }
            }
            // next profile
            std::size_t i = s;
            while (i > 0 && a[i - 1] == lo_size) --i;
            if (i == 0) break;
            --a[i - 1];
            for (std::size_t j = i; j < s; ++j) a[j] = a[i - 1];
          }
        }
    }
  return rep;
}

struct ProbeRange {
  std::size_t ell_lo = 2, ell_hi = 3;
  std::size_t n_lo = 2, n_hi = 6;
};

// Computes R(C_{2ell}, K_{1,n}) where enumeration allows and tabulates it
// against f_t + 1 and the classical closed forms. Never records failures.
inline LemmaReport probe_theorem(const ProbeRange& range, const SearchOptions& opts = {}) {
  LemmaReport rep;
  rep.lemma = LemmaId::theorem_probe;
  rep.scope = {{"ell_min", static_cast<long long>(range.ell_lo)}, {"ell_max", static_cast<long long>(range.ell_hi)},
               {"n_min", static_cast<long long>(range.n_lo)}, {"n_max", static_cast<long long>(range.n_hi)}};
  for (std::size_t ell = range.ell_lo; ell <= range.ell_hi; ++ell)
    for (std::size_t n = range.n_lo; n <= range.n_hi; ++n) {
      const ParamTriple p = ParamTriple::make(ell, n);
      ProbeRow row;
      row.ell = ell;
      row.n = n;
      row.t = p.t();
      row.f = f_t(p);
      row.closed_form = closed_form_value(p);
      auto r = ramsey_number(ell, n, opts);
      row.final = r.final;
      row.lo = r.lo;
      row.hi = r.hi;
      if (r.final) {
        row.lo = *r.value;
        row.matches_formula = *r.value == row.f + 1;
        if (row.closed_form) row.matches_closed_form = *r.value == *row.closed_form;
      }
      ++rep.instances_checked;
      rep.probe.push_back(row);
    }
  return rep;
}

// Extremal graphs for ex(N, C_{>=2ell}): every block is a clique, and all but
// at most one have exactly 2ell-1 vertices.
inline LemmaReport verify_erdos_gallai_structure(std::size_t min_order, std::size_t max_order, std::size_t ell,
                                                 const HarnessOptions& o = {}) {
  LemmaReport rep;
  rep.lemma = LemmaId::erdos_gallai;
  rep.scope = {{"min_order", static_cast<long long>(min_order)},
               {"max_order", static_cast<long long>(max_order)},
               {"ell", static_cast<long long>(ell)}};
  SearchOptions so;
  so.enumeration = detail::enum_opts(o);
  so.cycle_budget = o.cycle_budget;
  for (std::size_t order = min_order; order <= max_order; ++order) {
    auto tr = turan_number(order, ell, CycleBound::at_least_2ell, so);
    for (const auto& g : tr.extremal_examples) {
      ++rep.instances_checked;
      auto bt = blocks(g);
      std::size_t off_size = 0;
      for (const auto& b : bt.blocks) {
        Graph sub = induced_subgraph(g, b);
        if (sub.edge_count() != b.size() * (b.size() - 1) / 2)
          rep.failures.push_back(detail::failure(g, "block of order " + std::to_string(b.size()) + " is not a clique"));
        if (b.size() != 2 * ell - 1) ++off_size;
      }
      if (off_size > 1)
        rep.failures.push_back(
            detail::failure(g, std::to_string(off_size) + " blocks differ from order " + std::to_string(2 * ell - 1)));
    }
  }
  return rep;
}

// Constants of the dense-cycle-spectrum and small-block lemmas. Their
// hypotheses need ell around 10^10 or more, so nothing below is exercised
// by the sweeps; they exist to state the predicates precisely.
//
// Spectrum lemma: for a > 0, K_hat = 75e4 / a^5; a graph with at least
// 45 K_hat / a^4 vertices and minimum degree >= a * order contains a cycle of
// every even length r in [4, ec(G) - K_hat].
inline double spectrum_gap_constant(double a) { return 75e4 / std::pow(a, 5); }
inline double spectrum_min_order(double a) { return 45.0 * spectrum_gap_constant(a) / std::pow(a, 4); }

// Small-block lemma: K(c) = 24e6 c^5 (= spectrum_gap_constant(1/(2c))).
// For ell >= 360 c^4 K(c), a 2-connected C_{2ell}-free graph H with
// |V| <= 2 ell c and delta(H) >= ell + K(c) has |V| <= 2 ell - 1.
inline double small_block_constant(double c) { return 24e6 * std::pow(c, 5); }

struct SmallBlockCheck {
  bool hypothesis = false;  // all premises hold for (g, ell, c)
  bool conclusion = false;  // order <= 2 ell - 1
};

inline SmallBlockCheck small_block_predicate(const Graph& g, std::size_t ell, double c, SearchBudget budget = {}) {
  SmallBlockCheck r;
  r.conclusion = g.order() <= 2 * ell - 1;
  const double kc = small_block_constant(c);
  const double l = static_cast<double>(ell);
  if (c < 1 || l < 360 * std::pow(c, 4) * kc) return r;
  if (static_cast<double>(g.order()) > 2 * l * c) return r;
  if (static_cast<double>(min_degree(g)) < l + kc) return r;
  if (!is_2connected(g)) return r;
  r.hypothesis = find_cycle_of_length(g, 2 * ell, budget).absent();
  return r;
}

}  // namespace csr

#endif  // CSR_HARNESS_HPP
