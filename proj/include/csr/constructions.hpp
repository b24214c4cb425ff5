#ifndef CSR_CONSTRUCTIONS_HPP
#define CSR_CONSTRUCTIONS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csr/cycles.hpp"
#include "csr/graph.hpp"

namespace csr {

// (ell, n) together with the derived quantities
//   t = floor((n-1)/(2ell-1)) + 1   so that (t-1)(2ell-1) <= n-1 < t(2ell-1)
//   k = (n-1) mod t
//   m = floor((n-1)/t) + 1.
// The forbidden cycle is C_{2ell}; the star is K_{1,n}.
class ParamTriple {
 public:
  // Throws std::invalid_argument unless ell >= 2 and n >= 2.
  static ParamTriple make(std::size_t ell, std::size_t n) {
    if (ell < 2) throw std::invalid_argument("ell must be >= 2, got " + std::to_string(ell));
    if (n < 2) throw std::invalid_argument("n must be >= 2, got " + std::to_string(n));
    return ParamTriple(ell, n);
  }

  std::size_t ell() const { return ell_; }
  std::size_t n() const { return n_; }
  std::size_t t() const { return t_; }
  std::size_t k() const { return k_; }
  std::size_t m() const { return m_; }
  std::size_t cycle_length() const { return 2 * ell_; }
  std::size_t clique_order() const { return 2 * ell_ - 1; }

  bool operator==(const ParamTriple&) const = default;

 private:
  ParamTriple(std::size_t ell, std::size_t n)
      : ell_(ell),
        n_(n),
        t_((n - 1) / (2 * ell - 1) + 1),
        k_((n - 1) % t_),
        m_((n - 1) / t_ + 1) {}

  std::size_t ell_, n_, t_, k_, m_;
};

// max{ t(2ell-1), n + floor((n-1)/t) }
inline std::size_t f_t(const ParamTriple& p) {
  return std::max(p.t() * p.clique_order(), p.n() + (p.n() - 1) / p.t());
}

enum class Regime { clique_dominated, star_dominated, tie };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::clique_dominated: return "clique_dominated";
    case Regime::star_dominated: return "star_dominated";
    case Regime::tie: return "tie";
  }
  return "?";
}

inline Regime regime(const ParamTriple& p) {
  std::size_t clique = p.t() * p.clique_order();
  std::size_t star = p.n() + (p.n() - 1) / p.t();
  if (clique > star) return Regime::clique_dominated;
  if (clique < star) return Regime::star_dominated;
  return Regime::tie;
}

// Known exact values from the classical small regimes, when (ell, n) falls in
// one of them:
//   ell >= n              -> 2ell
//   n/2 < ell < n         -> 2n
//   3n/8 + 1 <= ell <= n/2 -> 4ell - 1
inline std::optional<std::size_t> closed_form_value(const ParamTriple& p) {
  const std::size_t l = p.ell(), n = p.n();
  if (l >= n) return 2 * l;
  if (2 * l > n) return 2 * n;
  if (8 * l >= 3 * n + 8) return 4 * l - 1;
  return std::nullopt;
}

// t disjoint copies of K_{2ell-1}; copy i occupies [i(2ell-1), (i+1)(2ell-1)).
inline Graph build_h1(const ParamTriple& p) {
  const std::size_t c = p.clique_order();
  GraphBuilder b(p.t() * c);
  for (std::size_t i = 0; i < p.t(); ++i)
    for (Vertex u = i * c; u < (i + 1) * c; ++u)
      for (Vertex v = u + 1; v < (i + 1) * c; ++v) b.add_edge(u, v);
  return std::move(b).finish();
}

// t+1-k copies of K_m glued at hub vertex 0 (each adds m-1 consecutive
// vertices after the hub), followed by k disjoint copies of K_m.
// Order n + floor((n-1)/t).
inline Graph build_h2(const ParamTriple& p) {
  const std::size_t m = p.m(), t = p.t(), k = p.k();
  const std::size_t shared = t + 1 - k;
  const std::size_t order = 1 + shared * (m - 1) + k * m;
  GraphBuilder b(order);
  auto clique = [&](const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) b.add_edge(vs[i], vs[j]);
  };
  Vertex next = 1;
  for (std::size_t c = 0; c < shared; ++c) {
    std::vector<Vertex> vs{0};
    for (std::size_t i = 1; i < m; ++i) vs.push_back(next++);
    clique(vs);
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < m; ++i) vs.push_back(next++);
    clique(vs);
  }
  return std::move(b).finish();
}

struct StarWitness {
  Vertex center = 0;
  std::vector<Vertex> leaves;  // non-neighbours of center in the graph
};

enum class CertStatus { certified, refuted, indeterminate };

inline const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::certified: return "certified";
    case CertStatus::refuted: return "refuted";
    case CertStatus::indeterminate: return "indeterminate";
  }
  return "?";
}

// Evidence that R(C_{2ell}, K_{1,n}) > order(g): g has no C_{2ell} and its
// complement has no K_{1,n}.
struct LowerBoundReport {
  std::size_t graph_order = 0;
  SearchStatus cycle_search = SearchStatus::absent;  // found => not cycle-free
  std::optional<CycleWitness> cycle_witness;
  bool star_free = true;
  std::optional<StarWitness> star_witness;
  std::optional<std::size_t> certified_bound;  // order + 1 when both checks pass

  bool cycle_free() const { return cycle_search == SearchStatus::absent; }
  CertStatus status() const {
    if (certified_bound) return CertStatus::certified;
    if (cycle_search == SearchStatus::found || !star_free) return CertStatus::refuted;
    return CertStatus::indeterminate;
  }
};

// First vertex with at least n non-neighbours, with its n smallest.
inline std::optional<StarWitness> find_complement_star(const Graph& g, std::size_t n) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.order() - 1 - g.degree(v) < n) continue;
    StarWitness w{v, {}};
    for (Vertex x = 0; x < g.order() && w.leaves.size() < n; ++x)
      if (x != v && !g.adjacent(v, x)) w.leaves.push_back(x);
    return w;
  }
  return std::nullopt;
}

// Works on any candidate graph, not only the two constructions above.
inline LowerBoundReport certify_lower_bound(const Graph& g, const ParamTriple& p, SearchBudget budget = {}) {
  LowerBoundReport r;
  r.graph_order = g.order();
  auto cyc = find_cycle_of_length(g, p.cycle_length(), budget);
  r.cycle_search = cyc.status;
  r.cycle_witness = std::move(cyc.witness);
  r.star_witness = find_complement_star(g, p.n());
  r.star_free = !r.star_witness.has_value();
  if (r.cycle_free() && r.star_free) r.certified_bound = g.order() + 1;
  return r;
}

}  // namespace csr

#endif  // CSR_CONSTRUCTIONS_HPP
