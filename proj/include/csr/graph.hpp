#ifndef CSR_GRAPH_HPP
#define CSR_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "csr/errors.hpp"
#include "csr/vertex_set.hpp"

namespace csr {

using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

// Undirected simple graph on vertices 0..order-1. Immutable once built;
// every transformation returns a new value.
class Graph {
 public:
  Graph() = default;

  // Throws GraphError on an out-of-range endpoint or a loop. Duplicate and
  // reversed pairs collapse to one edge.
  static Graph build(std::size_t order, std::span<const Edge> edges);
  static Graph build(std::size_t order, std::initializer_list<Edge> edges) {
    return build(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return rows_.size(); }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  const VertexSet& neighbours(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.size();
    return twice / 2;
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      rows_[u].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  explicit Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)) {}

  std::vector<VertexSet> rows_;
};

// Mutable staging area for a Graph. Used by the transformations below.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order) : rows_(order, VertexSet(order)) {}

  std::size_t order() const { return rows_.size(); }

  void add_edge(Vertex u, Vertex v) {
    if (u >= order() || v >= order())
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." +
                       std::to_string(order() == 0 ? 0 : order() - 1));
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
  }
  void remove_edge(Vertex u, Vertex v) {
    rows_[u].erase(v);
    rows_[v].erase(u);
  }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }

  Graph finish() && { return Graph(std::move(rows_)); }

 private:
  std::vector<VertexSet> rows_;
};

inline Graph Graph::build(std::size_t order, std::span<const Edge> edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).finish();
}

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).finish();
}

inline std::size_t degree(const Graph& g, Vertex v) {
  if (v >= g.order()) throw std::out_of_range("vertex out of range");
  return g.degree(v);
}

// 0 for the empty graph.
inline std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

inline std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

// Vertices of `keep` are relabelled 0..|keep|-1 in ascending original order.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted)
    if (v >= g.order())
      throw GraphError("vertex " + std::to_string(v) + " outside graph of order " +
                       std::to_string(g.order()));
  GraphBuilder b(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (g.adjacent(sorted[i], sorted[j])) b.add_edge(i, j);
  return std::move(b).finish();
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  return induced_subgraph(g, keep.to_vector());
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return std::move(out).finish();
}

// Connected components of g restricted to `within`, each sorted ascending,
// listed by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                             const VertexSet& within) {
  std::vector<std::vector<Vertex>> comps;
  VertexSet unseen = within;
  for (Vertex s = unseen.first(); s != VertexSet::npos; s = unseen.first()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.insert(s);
    unseen.erase(s);
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.order());
      frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
      next &= unseen;
      unseen -= next;
      frontier = std::move(next);
    }
    comps.push_back(comp.to_vector());
  }
  return comps;
}

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  return connected_components(g, VertexSet::full(g.order()));
}

// The empty graph counts as connected.
inline bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

inline Graph complete_graph(std::size_t order) {
  GraphBuilder b(order);
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v) b.add_edge(u, v);
  return std::move(b).finish();
}

inline Graph cycle_graph(std::size_t order) {
  GraphBuilder b(order);
  for (Vertex v = 0; v < order; ++v) b.add_edge(v, (v + 1) % order);
  return std::move(b).finish();
}

inline Graph path_graph(std::size_t order) {
  GraphBuilder b(order);
  for (Vertex v = 0; v + 1 < order; ++v) b.add_edge(v, v + 1);
  return std::move(b).finish();
}

inline Graph complete_bipartite(std::size_t left, std::size_t right) {
  GraphBuilder b(left + right);
  for (Vertex u = 0; u < left; ++u)
    for (Vertex v = 0; v < right; ++v) b.add_edge(u, left + v);
  return std::move(b).finish();
}

// Cliques of the given orders glued at vertex 0 (each later clique shares
// exactly vertex 0 with the rest).
inline Graph cliques_sharing_vertex(std::span<const std::size_t> sizes) {
  std::size_t order = 1;
  for (auto s : sizes) order += s - 1;
  GraphBuilder b(order);
  Vertex next = 1;
  for (auto s : sizes) {
    std::vector<Vertex> members{0};
    for (std::size_t i = 1; i < s; ++i) members.push_back(next++);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) b.add_edge(members[i], members[j]);
  }
  return std::move(b).finish();
}

inline Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return std::move(b).finish();
}

}  // namespace csr

#endif  // CSR_GRAPH_HPP
