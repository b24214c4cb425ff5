#ifndef CSR_VALIDATE_HPP
#define CSR_VALIDATE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "csr/graph.hpp"

// Witness checkers. These deliberately share no code with the searches or
// procedures that produce the witnesses; each returns an error description,
// or nullopt when the witness is valid.

namespace csr::validate {

using Problem = std::optional<std::string>;

inline Problem distinct_in_range(const Graph& g, const std::vector<Vertex>& vs) {
  std::set<Vertex> seen;
  for (Vertex v : vs) {
    if (v >= g.order()) return "vertex " + std::to_string(v) + " out of range";
    if (!seen.insert(v).second) return "vertex " + std::to_string(v) + " repeated";
  }
  return std::nullopt;
}

inline Problem cycle(const Graph& g, const std::vector<Vertex>& vs, std::optional<std::size_t> length = {}) {
  if (vs.size() < 3) return "cycle has fewer than 3 vertices";
  if (length && vs.size() != *length)
    return "cycle has " + std::to_string(vs.size()) + " vertices, expected " + std::to_string(*length);
  if (auto p = distinct_in_range(g, vs)) return p;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
    if (!g.adjacent(a, b)) return "vertices " + std::to_string(a) + " and " + std::to_string(b) + " not adjacent";
  }
  return std::nullopt;
}

inline Problem path(const Graph& g, const std::vector<Vertex>& vs, Vertex from, Vertex to, std::size_t edges) {
  if (vs.size() != edges + 1) return "path has wrong length";
  if (vs.front() != from || vs.back() != to) return "path has wrong endpoints";
  if (auto p = distinct_in_range(g, vs)) return p;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    if (!g.adjacent(vs[i], vs[i + 1])) return "path step not an edge";
  return std::nullopt;
}

// A K_{1,n} in the complement: `leaves` are n distinct non-neighbours of `center`.
inline Problem complement_star(const Graph& g, Vertex center, const std::vector<Vertex>& leaves, std::size_t n) {
  if (center >= g.order()) return "star center out of range";
  if (leaves.size() != n) return "star has " + std::to_string(leaves.size()) + " leaves, expected " + std::to_string(n);
  if (auto p = distinct_in_range(g, leaves)) return p;
  for (Vertex x : leaves) {
    if (x == center) return "star leaf equals center";
    if (g.adjacent(center, x)) return "star leaf " + std::to_string(x) + " adjacent to center in the graph";
  }
  return std::nullopt;
}

namespace detail {

// Connectivity by plain DFS on an explicit vertex list.
inline bool connected_on(const Graph& g, const std::vector<Vertex>& vs, std::optional<Vertex> skip) {
  std::vector<Vertex> live;
  for (Vertex v : vs)
    if (!skip || v != *skip) live.push_back(v);
  if (live.empty()) return true;
  std::set<Vertex> in(live.begin(), live.end()), seen{live.front()};
  std::vector<Vertex> stack{live.front()};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : live)
      if (in.count(w) && !seen.count(w) && g.adjacent(v, w)) {
        seen.insert(w);
        stack.push_back(w);
      }
  }
  return seen.size() == live.size();
}

}  // namespace detail

// 2-connectivity by definition: order >= 3, connected, and still connected
// after deleting any single vertex.
inline bool two_connected_on(const Graph& g, const std::vector<Vertex>& vs) {
  if (vs.size() < 3) return false;
  if (!detail::connected_on(g, vs, std::nullopt)) return false;
  for (Vertex v : vs)
    if (!detail::connected_on(g, vs, v)) return false;
  return true;
}

// removed and components partition V(g); every component induces a
// 2-connected subgraph; no edges join different components; |removed| <= s-1.
inline Problem decomposition(const Graph& g, const std::vector<Vertex>& removed,
                             const std::vector<std::vector<Vertex>>& components) {
  std::vector<int> owner(g.order(), -2);
  for (Vertex u : removed) {
    if (u >= g.order()) return "removed vertex out of range";
    if (owner[u] != -2) return "removed vertex repeated";
    owner[u] = -1;
  }
  for (std::size_t i = 0; i < components.size(); ++i)
    for (Vertex v : components[i]) {
      if (v >= g.order()) return "component vertex out of range";
      if (owner[v] != -2) return "vertex " + std::to_string(v) + " covered twice";
      owner[v] = static_cast<int>(i);
    }
  for (Vertex v = 0; v < g.order(); ++v)
    if (owner[v] == -2) return "vertex " + std::to_string(v) + " not covered";
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) && owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v])
        return "edge joins two components";
  for (const auto& c : components)
    if (!two_connected_on(g, c)) return "a component is not 2-connected";
  if (components.empty() && g.order() > 0) return "no components";
  if (removed.size() + 1 > components.size()) return "|U| exceeds s - 1";
  return std::nullopt;
}

}  // namespace csr::validate

#endif  // CSR_VALIDATE_HPP
