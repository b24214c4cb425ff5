#ifndef CSR_CYCLES_HPP
#define CSR_CYCLES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csr/graph.hpp"
#include "csr/structure.hpp"

namespace csr {

// Closed walk through distinct vertices; consecutive entries (cyclically)
// adjacent in the source graph.
struct CycleWitness {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.size(); }
  bool operator==(const CycleWitness&) const = default;
};

struct PathWitness {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool operator==(const PathWitness&) const = default;
};

// Node budget for the exact searches; 0 means unlimited.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
};

enum class SearchStatus { found, absent, exhausted };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::exhausted: return "budget_exhausted";
  }
  return "?";
}

template <class Witness>
struct SearchResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::found; }
  bool absent() const { return status == SearchStatus::absent; }
  bool exhausted() const { return status == SearchStatus::exhausted; }
};

namespace detail {

struct BudgetExceeded {};

// Depth-first search over simple paths. Candidates are tried in ascending
// index order, so the first witness found is the lexicographically smallest.
// Pruning (never affects completeness): the vertices still reachable from the
// path end through unused allowed vertices must be numerous enough, must
// include a neighbour of the closing vertex, and when every one of them has to
// be used each needs two usable neighbours.
class PathSearcher {
 public:
  PathSearcher(const Graph& g, SearchBudget budget) : g_(g), budget_(budget) {}

  std::uint64_t nodes() const { return nodes_; }

  // Cycle on exactly k vertices with minimum vertex `anchor`, inside `allowed`
  // (which must contain anchor). Orientation: second vertex < last vertex.
  std::optional<CycleWitness> cycle_through(Vertex anchor, std::size_t k, const VertexSet& allowed) {
    closing_ = anchor;
    cycle_ = true;
    target_len_ = k;
    allowed_ = allowed;
    used_ = VertexSet(g_.order());
    path_.assign(1, anchor);
    used_.insert(anchor);
    if (!extend()) return std::nullopt;
    return CycleWitness{path_};
  }

  // Path with exactly k edges from v to w.
  std::optional<PathWitness> path_between(Vertex v, Vertex w, std::size_t k) {
    closing_ = w;
    cycle_ = false;
    target_len_ = k + 1;
    allowed_ = VertexSet::full(g_.order());
    used_ = VertexSet(g_.order());
    path_.assign(1, v);
    used_.insert(v);
    if (!extend()) return std::nullopt;
    return PathWitness{path_};
  }

 private:
  void tick() {
    ++nodes_;
    if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) throw BudgetExceeded{};
  }

  // Vertices that may still be placed strictly between the end and closing_.
  VertexSet free_interior() const {
    VertexSet free = allowed_ - used_;
    if (!cycle_) free.erase(closing_);
    return free;
  }

  bool feasible() const {
    const Vertex end = path_.back();
    const std::size_t placed = path_.size();
    // Interior vertices still to place (for paths, closing_ is placed last).
    const std::size_t need = cycle_ ? target_len_ - placed : target_len_ - placed - 1;
    if (need == 0) return true;
    const VertexSet free = free_interior();
    VertexSet reach(g_.order());
    VertexSet frontier = g_.neighbours(end) & free;
    while (!frontier.empty()) {
      reach |= frontier;
      VertexSet next(g_.order());
      frontier.for_each([&](Vertex x) { next |= g_.neighbours(x); });
      next &= free;
      next -= reach;
      frontier = std::move(next);
    }
    const std::size_t r = reach.size();
    if (r < need) return false;
    if (!g_.neighbours(closing_).intersects(reach)) return false;
    if (r == need) {
      // Every reachable vertex must lie on the remaining path.
      VertexSet pool = reach;
      pool.insert(end);
      pool.insert(closing_);
      bool ok = true;
      reach.for_each([&](Vertex x) {
        if (ok && g_.neighbours(x).intersection_size(pool) < 2) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  bool extend() {
    tick();
    const Vertex end = path_.back();
    const std::size_t placed = path_.size();

    if (cycle_ && placed == target_len_) {
      return g_.adjacent(end, closing_) && path_[1] < path_.back();
    }
    if (!cycle_ && placed + 1 == target_len_) {
      if (!g_.adjacent(end, closing_)) return false;
      path_.push_back(closing_);
      return true;
    }
    if (!feasible()) return false;

    VertexSet cand = g_.neighbours(end) & free_interior();
    const bool last_interior = cycle_ && placed + 1 == target_len_;
    if (last_interior) cand &= g_.neighbours(closing_);
    for (Vertex x = cand.first(); x != VertexSet::npos; x = cand.next(x + 1)) {
      if (last_interior && x <= path_[1]) continue;
      path_.push_back(x);
      used_.insert(x);
      if (extend()) return true;
      used_.erase(x);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  SearchBudget budget_;
  std::uint64_t nodes_ = 0;
  Vertex closing_ = 0;
  bool cycle_ = true;
  std::size_t target_len_ = 0;
  VertexSet allowed_;
  VertexSet used_;
  std::vector<Vertex> path_;
};

// For each vertex, the union of the blocks of order >= k that contain it.
inline std::vector<VertexSet> large_block_neighbourhoods(const Graph& g, std::size_t k) {
  std::vector<VertexSet> out(g.order(), VertexSet(g.order()));
  for (const auto& b : blocks(g).blocks) {
    if (b.size() < k) continue;
    VertexSet members = VertexSet::of(g.order(), b);
    for (Vertex v : b) out[v] |= members;
  }
  return out;
}

}  // namespace detail

// Exhaustive search for a cycle on exactly k vertices. A cycle lies inside
// one block, so only blocks of order >= k are explored. The witness starts
// at its smallest vertex and is the lexicographically smallest such sequence.
// Throws std::invalid_argument for k < 3.
inline SearchResult<CycleWitness> find_cycle_of_length(const Graph& g, std::size_t k,
                                                       SearchBudget budget = {}) {
  if (k < 3) throw std::invalid_argument("find_cycle_of_length: k must be >= 3, got " + std::to_string(k));
  SearchResult<CycleWitness> res;
  if (k > g.order()) return res;
  auto zones = detail::large_block_neighbourhoods(g, k);
  detail::PathSearcher searcher(g, budget);
  try {
    for (Vertex a = 0; a < g.order(); ++a) {
      VertexSet allowed = zones[a] & VertexSet::from(g.order(), a);
      if (allowed.size() < k) continue;
      if (auto w = searcher.cycle_through(a, k, allowed)) {
        res.status = SearchStatus::found;
        res.witness = std::move(w);
        break;
      }
    }
  } catch (const detail::BudgetExceeded&) {
    res.status = SearchStatus::exhausted;
  }
  res.nodes = searcher.nodes();
  return res;
}

// Spanning cycle. Throws std::invalid_argument for order < 3.
inline SearchResult<CycleWitness> is_hamiltonian(const Graph& g, SearchBudget budget = {}) {
  if (g.order() < 3)
    throw std::invalid_argument("is_hamiltonian: order must be >= 3, got " + std::to_string(g.order()));
  return find_cycle_of_length(g, g.order(), budget);
}

// Path with exactly k edges from v to w. Throws std::invalid_argument when
// v == w or k is outside 1..order-1.
inline SearchResult<PathWitness> find_path_of_length(const Graph& g, Vertex v, Vertex w, std::size_t k,
                                                     SearchBudget budget = {}) {
  if (v >= g.order() || w >= g.order()) throw std::invalid_argument("find_path_of_length: vertex out of range");
  if (v == w) throw std::invalid_argument("find_path_of_length: endpoints must differ");
  if (k < 1 || k + 1 > g.order())
    throw std::invalid_argument("find_path_of_length: k must lie in 1..order-1, got " + std::to_string(k));
  SearchResult<PathWitness> res;
  detail::PathSearcher searcher(g, budget);
  try {
    if (auto p = searcher.path_between(v, w, k)) {
      res.status = SearchStatus::found;
      res.witness = std::move(p);
    }
  } catch (const detail::BudgetExceeded&) {
    res.status = SearchStatus::exhausted;
  }
  res.nodes = searcher.nodes();
  return res;
}

// Cycle lengths present among the requested parity class. Lengths are
// searched in descending order.
struct Spectrum {
  std::vector<std::size_t> lengths;  // ascending
  bool complete = true;              // false when some length hit the budget
};

namespace detail {

inline Spectrum cycle_spectrum(const Graph& g, std::size_t lo, std::size_t step, SearchBudget budget) {
  Spectrum s;
  if (g.order() < lo) return s;
  std::size_t hi = g.order();
  while ((hi - lo) % step != 0) --hi;
  for (std::size_t k = hi;; k -= step) {
    auto r = find_cycle_of_length(g, k, budget);
    if (r.found()) s.lengths.insert(s.lengths.begin(), k);
    if (r.exhausted()) s.complete = false;
    if (k < lo + step) break;
  }
  return s;
}

}  // namespace detail

inline Spectrum even_cycle_spectrum(const Graph& g, SearchBudget budget = {}) {
  return detail::cycle_spectrum(g, 4, 2, budget);
}

// Length of the longest even cycle, 0 if there is none. `exhausted` on the
// result is set when the budget ran out before the answer was certain.
struct LongestEven {
  std::size_t length = 0;
  std::optional<CycleWitness> witness;
  bool exhausted = false;
};

inline LongestEven longest_even_cycle_with_witness(const Graph& g, SearchBudget budget = {}) {
  LongestEven out;
  if (g.order() < 4) return out;
  std::size_t hi = g.order() - g.order() % 2;
  for (std::size_t k = hi; k >= 4; k -= 2) {
    auto r = find_cycle_of_length(g, k, budget);
    if (r.exhausted()) out.exhausted = true;
    if (r.found()) {
      out.length = k;
      out.witness = std::move(r.witness);
      return out;
    }
  }
  return out;
}

inline std::size_t longest_even_cycle(const Graph& g, SearchBudget budget = {}) {
  auto r = longest_even_cycle_with_witness(g, budget);
  if (r.exhausted) throw std::runtime_error("longest_even_cycle: search budget exhausted");
  return r.length;
}

// Cycles of every length 3..order. Throws std::invalid_argument for order < 3.
inline bool is_pancyclic(const Graph& g, SearchBudget budget = {}) {
  if (g.order() < 3)
    throw std::invalid_argument("is_pancyclic: order must be >= 3, got " + std::to_string(g.order()));
  for (std::size_t k = g.order(); k >= 3; --k) {
    auto r = find_cycle_of_length(g, k, budget);
    if (r.exhausted()) throw std::runtime_error("is_pancyclic: search budget exhausted");
    if (!r.found()) return false;
  }
  return true;
}

// True iff g contains a cycle with at least `min_len` vertices.
inline SearchStatus has_cycle_at_least(const Graph& g, std::size_t min_len, SearchBudget budget = {}) {
  bool exhausted = false;
  for (std::size_t k = g.order(); k >= std::max<std::size_t>(min_len, 3); --k) {
    auto r = find_cycle_of_length(g, k, budget);
    if (r.found()) return SearchStatus::found;
    if (r.exhausted()) exhausted = true;
  }
  return exhausted ? SearchStatus::exhausted : SearchStatus::absent;
}

}  // namespace csr

#endif  // CSR_CYCLES_HPP
