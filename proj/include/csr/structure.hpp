#ifndef CSR_STRUCTURE_HPP
#define CSR_STRUCTURE_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "csr/errors.hpp"
#include "csr/graph.hpp"

namespace csr {

// Maximal 2-connected subgraphs plus bridge edges. Every edge lies in exactly
// one block; two blocks share at most one vertex, which is then a cut vertex.
struct BlockTree {
  std::vector<std::vector<Vertex>> blocks;  // each sorted; list sorted
  std::vector<Vertex> cut_vertices;         // sorted
};

// Hopcroft-Tarjan biconnected components, iterative so deep paths do not
// overflow the call stack.
inline BlockTree blocks(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbours(v).to_vector();

  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, unvisited), low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::vector<Edge> edge_stack;
  BlockTree out;
  std::size_t timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != unvisited) continue;
    disc[root] = low[root] = timer++;
    std::size_t root_children = 0;
    std::vector<Frame> stack{{root, root, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        Vertex w = adj[f.v][f.next++];
        if (disc[w] == unvisited) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          if (f.v == root) ++root_children;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Vertex child = f.v;
      Vertex parent = f.parent;
      stack.pop_back();
      if (stack.empty()) break;
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] >= disc[parent]) {
        if (parent != root) is_cut[parent] = true;
        std::vector<Vertex> block;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e == Edge{parent, child}) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
    if (root_children >= 2) is_cut[root] = true;
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

inline std::vector<Vertex> cut_vertices(const Graph& g) { return blocks(g).cut_vertices; }

// Order >= 3, connected, and no cut vertex. K1 and K2 are not 2-connected.
inline bool is_2connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

// Bondy-Chvatal closure: repeatedly join non-adjacent pairs whose degree sum
// is at least the order. Worklist over candidate pairs; a join can only make
// pairs through its two endpoints newly eligible.
inline Graph bc_closure(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  std::vector<std::size_t> deg(n);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);

  std::deque<Edge> work;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) work.emplace_back(u, v);

  while (!work.empty()) {
    auto [u, v] = work.front();
    work.pop_front();
    if (b.adjacent(u, v) || deg[u] + deg[v] < n) continue;
    b.add_edge(u, v);
    ++deg[u];
    ++deg[v];
    for (Vertex x = 0; x < n; ++x) {
      if (x != u && !b.adjacent(u, x)) work.emplace_back(std::min(u, x), std::max(u, x));
      if (x != v && !b.adjacent(v, x)) work.emplace_back(std::min(v, x), std::max(v, x));
    }
  }
  return std::move(b).finish();
}

// Output of the cut-vertex peeling procedure: G - removed is the disjoint
// union of the 2-connected induced subgraphs on `components`.
struct Decomposition {
  std::vector<Vertex> removed;                 // in peeling order
  std::vector<std::vector<Vertex>> components;  // each sorted; by smallest member
  bool hypothesis_held = true;                 // false only in unchecked mode
  std::size_t k = 0;

  std::size_t s() const { return components.size(); }
};

// True iff min_degree(g) >= order/k + k, evaluated exactly in integers.
inline bool decomposition_hypothesis(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  return k >= 2 && n >= k && min_degree(g) * k >= n + k * k;
}

// Peels cut vertices until every component of G - U is free of them: the
// lowest-index cut vertex of the lowest-indexed component that has one is
// removed at each step. With `unchecked`, runs even when the hypothesis
// fails and flags the result; otherwise throws PreconditionError. Throws
// InternalError if a guaranteed property of the output is violated.
inline Decomposition decompose_2connected(const Graph& g, std::size_t k, bool unchecked = false) {
  const bool hyp = decomposition_hypothesis(g, k);
  if (!hyp && !unchecked)
    throw PreconditionError("decompose_2connected: need order >= k >= 2 and min degree >= order/k + k (order " +
                            std::to_string(g.order()) + ", k " + std::to_string(k) +
                            ", min degree " + std::to_string(min_degree(g)) + ")");
  Decomposition d;
  d.k = k;
  d.hypothesis_held = hyp;
  VertexSet alive = VertexSet::full(g.order());

  while (true) {
    auto comps = connected_components(g, alive);
    bool peeled = false;
    for (const auto& comp : comps) {
      Graph sub = induced_subgraph(g, comp);
      auto cuts = cut_vertices(sub);
      if (cuts.empty()) continue;
      Vertex v = comp[cuts.front()];
      d.removed.push_back(v);
      alive.erase(v);
      peeled = true;
      break;
    }
    if (!peeled) {
      d.components = std::move(comps);
      break;
    }
  }

  if (hyp) {
    for (const auto& comp : d.components)
      if (!is_2connected(induced_subgraph(g, comp)))
        throw InternalError("decompose_2connected: component of size " + std::to_string(comp.size()) +
                            " is not 2-connected although the hypothesis held");
    if (d.s() >= k || d.removed.size() + 1 > d.s())
      throw InternalError("decompose_2connected: s = " + std::to_string(d.s()) + ", |U| = " +
                          std::to_string(d.removed.size()) + " violates s < k and |U| <= s - 1");
  }
  return d;
}

// Augments each component V'_i with U_i = {u in U : deg(u, V'_i) >= threshold}.
// `forest_edges` lists the pairs (u, i) with u in U_i; the incidence graph
// of U against the components is a forest whenever the source graph is free
// of the relevant even cycle.
struct HubAttachment {
  std::vector<std::vector<Vertex>> augmented;
  std::vector<std::pair<Vertex, std::size_t>> forest_edges;

  // Acyclicity of the bipartite incidence graph {components} + U.
  bool incidence_is_forest() const {
    // Union-find over component nodes 0..s-1 and hub nodes s.. .
    std::vector<Vertex> hubs;
    for (auto& [u, i] : forest_edges) hubs.push_back(u);
    std::sort(hubs.begin(), hubs.end());
    hubs.erase(std::unique(hubs.begin(), hubs.end()), hubs.end());
    std::vector<std::size_t> parent(augmented.size() + hubs.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto& [u, i] : forest_edges) {
      std::size_t h = augmented.size() +
                      static_cast<std::size_t>(std::lower_bound(hubs.begin(), hubs.end(), u) - hubs.begin());
      std::size_t a = find(h), c = find(i);
      if (a == c) return false;
      parent[a] = c;
    }
    return true;
  }
};

inline HubAttachment attach_low_degree_hubs(const Graph& g, const Decomposition& d,
                                            std::size_t threshold) {
  HubAttachment out;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& comp = d.components[i];
    VertexSet members = VertexSet::of(g.order(), comp);
    std::vector<Vertex> aug = comp;
    for (Vertex u : d.removed) {
      if (g.neighbours(u).intersection_size(members) >= threshold) {
        aug.push_back(u);
        out.forest_edges.emplace_back(u, i);
      }
    }
    std::sort(aug.begin(), aug.end());
    out.augmented.push_back(std::move(aug));
  }
  return out;
}

}  // namespace csr

#endif  // CSR_STRUCTURE_HPP
