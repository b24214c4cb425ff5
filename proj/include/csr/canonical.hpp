#ifndef CSR_CANONICAL_HPP
#define CSR_CANONICAL_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "csr/graph.hpp"

namespace csr {

// Compact graph for enumeration work: at most 32 vertices, one bit row each.
struct SmallGraph {
  static constexpr int max_order = 32;

  int order = 0;
  std::array<std::uint32_t, max_order> rows{};

  bool adjacent(int u, int v) const { return ((rows[u] >> v) & 1U) != 0; }
  int degree(int v) const { return std::popcount(rows[v]); }
  void add_edge(int u, int v) {
    rows[u] |= 1U << v;
    rows[v] |= 1U << u;
  }
  bool operator==(const SmallGraph& o) const {
    return order == o.order && std::equal(rows.begin(), rows.begin() + order, o.rows.begin());
  }
};

inline SmallGraph to_small(const Graph& g) {
  if (g.order() > SmallGraph::max_order) throw std::invalid_argument("graph too large for SmallGraph");
  SmallGraph s;
  s.order = static_cast<int>(g.order());
  for (auto [u, v] : g.edges()) s.add_edge(static_cast<int>(u), static_cast<int>(v));
  return s;
}

inline Graph to_graph(const SmallGraph& s) {
  GraphBuilder b(static_cast<std::size_t>(s.order));
  for (int u = 0; u < s.order; ++u)
    for (int v = u + 1; v < s.order; ++v)
      if (s.adjacent(u, v)) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).finish();
}

inline SmallGraph small_complement(const SmallGraph& g) {
  SmallGraph c;
  c.order = g.order;
  const std::uint32_t all = g.order == 32 ? ~0U : ((1U << g.order) - 1);
  for (int v = 0; v < g.order; ++v) c.rows[v] = ~g.rows[v] & all & ~(1U << v);
  return c;
}

struct CanonicalLabeling {
  std::vector<int> lab;     // lab[i] = original vertex placed at position i
  std::vector<int> orbit;   // orbit[v] = smallest vertex in the Aut(G)-orbit of v
  SmallGraph form;          // G relabelled by lab; equal for isomorphic inputs
};

namespace detail {

using Perm = std::array<std::uint8_t, SmallGraph::max_order>;

// Individualisation-refinement canonical labelling. Ordered partitions are
// refined to equitable ones by neighbour counts; the search tree branches on
// the first non-singleton cell; the canonical form is the lexicographically
// largest relabelled adjacency matrix over all leaves. Automorphisms are
// collected from leaves whose relabelled graph repeats the first or best one,
// and children equivalent under automorphisms fixing the current
// individualised vertices are skipped.
class Canonizer {
 public:
  explicit Canonizer(const SmallGraph& g) : g_(g), n_(g.order) {}

  CanonicalLabeling run() {
    std::vector<int> lab(n_);
    std::iota(lab.begin(), lab.end(), 0);
    std::vector<int> cell_end(n_);  // cell_end[i] = last position of the cell holding position i
    for (int i = 0; i < n_; ++i) cell_end[i] = n_ - 1;
    std::vector<int> fixed;
    if (n_ > 0) {
      refine(lab, cell_end);
      search(lab, cell_end, fixed);
    }

    CanonicalLabeling out;
    out.lab = best_lab_;
    out.form = best_form_;
    out.form.order = n_;
    out.orbit.resize(n_);
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gen : generators_)
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gen[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    for (int v = 0; v < n_; ++v) out.orbit[v] = find(v);
    return out;
  }

 private:
  // Splits cells by the vector of neighbour counts into every cell until
  // stable. Depends only on the ordered partition and the graph, so it
  // commutes with relabelling.
  void refine(std::vector<int>& lab, std::vector<int>& cell_end) const {
    while (true) {
      std::vector<std::uint32_t> masks;
      std::vector<int> starts;
      for (int i = 0; i < n_; i = cell_end[i] + 1) {
        std::uint32_t m = 0;
        for (int j = i; j <= cell_end[i]; ++j) m |= 1U << lab[j];
        masks.push_back(m);
        starts.push_back(i);
      }
      if (static_cast<int>(masks.size()) == n_) return;
      bool split = false;
      std::vector<std::uint8_t> sig(static_cast<std::size_t>(n_) * masks.size());
      auto sig_of = [&](int v) { return sig.data() + static_cast<std::size_t>(v) * masks.size(); };
      for (int v = 0; v < n_; ++v)
        for (std::size_t c = 0; c < masks.size(); ++c)
          sig_of(v)[c] = static_cast<std::uint8_t>(std::popcount(g_.rows[v] & masks[c]));
      for (int s : starts) {
        int e = cell_end[s];
        if (s == e) continue;
        auto less = [&](int a, int b) {
          return std::lexicographical_compare(sig_of(a), sig_of(a) + masks.size(), sig_of(b),
                                              sig_of(b) + masks.size());
        };
        std::stable_sort(lab.begin() + s, lab.begin() + e + 1, less);
        int run_start = s;
        for (int j = s + 1; j <= e + 1; ++j) {
          if (j == e + 1 || less(lab[j - 1], lab[j])) {
            for (int x = run_start; x < j; ++x) cell_end[x] = j - 1;
            if (j <= e) split = true;
            run_start = j;
          }
        }
      }
      if (!split) return;
    }
  }

  SmallGraph relabel(const std::vector<int>& lab) const {
    SmallGraph f;
    f.order = n_;
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
    for (int i = 0; i < n_; ++i) {
      std::uint32_t row = g_.rows[lab[i]], out = 0;
      while (row != 0) {
        int v = std::countr_zero(row);
        row &= row - 1;
        out |= 1U << pos[v];
      }
      f.rows[i] = out;
    }
    return f;
  }

  static int compare(const SmallGraph& a, const SmallGraph& b, int n) {
    for (int i = 0; i < n; ++i) {
      if (a.rows[i] != b.rows[i]) return a.rows[i] < b.rows[i] ? -1 : 1;
    }
    return 0;
  }

  void add_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    Perm p{};
    for (int i = 0; i < n_; ++i) p[from[i]] = static_cast<std::uint8_t>(to[i]);
    bool identity = true;
    for (int v = 0; v < n_; ++v) identity = identity && p[v] == v;
    if (!identity) generators_.push_back(p);
  }

  void leaf(const std::vector<int>& lab) {
    SmallGraph f = relabel(lab);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_lab_ = best_lab_ = lab;
      first_form_ = best_form_ = f;
      return;
    }
    if (compare(f, first_form_, n_) == 0) {
      add_automorphism(first_lab_, lab);
      return;
    }
    int c = compare(f, best_form_, n_);
    if (c == 0) {
      add_automorphism(best_lab_, lab);
    } else if (c > 0) {
      best_lab_ = lab;
      best_form_ = f;
    }
  }

  // Orbit representatives of the group generated by the known automorphisms
  // that fix every vertex in `fixed`.
  std::vector<int> stabiliser_orbits(const std::vector<int>& fixed) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gen : generators_) {
      bool fixes = true;
      for (int v : fixed) fixes = fixes && gen[v] == v;
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gen[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(const std::vector<int>& lab, const std::vector<int>& cell_end, std::vector<int>& fixed) {
    int target = -1;
    for (int i = 0; i < n_; i = cell_end[i] + 1)
      if (cell_end[i] > i) {
        target = i;
        break;
      }
    if (target < 0) {
      leaf(lab);
      return;
    }
    const int end = cell_end[target];
    std::vector<int> cell(lab.begin() + target, lab.begin() + end + 1);
    std::vector<int> explored;
    for (int v : cell) {
      if (!explored.empty()) {
        auto orb = stabiliser_orbits(fixed);
        bool skip = false;
        for (int w : explored) skip = skip || orb[w] == orb[v];
        if (skip) continue;
      }
      explored.push_back(v);
      std::vector<int> child_lab = lab;
      std::vector<int> child_end = cell_end;
      auto it = std::find(child_lab.begin() + target, child_lab.begin() + end + 1, v);
      std::rotate(child_lab.begin() + target, it, it + 1);
      child_end[target] = target;
      for (int x = target + 1; x <= end; ++x) child_end[x] = end;
      refine(child_lab, child_end);
      fixed.push_back(v);
      search(child_lab, child_end, fixed);
      fixed.pop_back();
    }
  }

  const SmallGraph& g_;
  int n_;
  bool have_leaf_ = false;
  std::vector<int> first_lab_, best_lab_;
  SmallGraph first_form_, best_form_;
  std::vector<Perm> generators_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const SmallGraph& g) { return detail::Canonizer(g).run(); }

inline SmallGraph canonical_form(const SmallGraph& g) { return canonical_labeling(g).form; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(to_small(a)) == canonical_form(to_small(b));
}

}  // namespace csr

#endif  // CSR_CANONICAL_HPP
