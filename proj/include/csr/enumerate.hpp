#ifndef CSR_ENUMERATE_HPP
#define CSR_ENUMERATE_HPP

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "csr/canonical.hpp"
#include "csr/errors.hpp"
#include "csr/graph.hpp"
#include "csr/parallel.hpp"

namespace csr {

inline constexpr std::size_t builtin_enumeration_ceiling = 10;

// CSR_ENUM_CEILING when set to a positive integer, else 10.
inline std::size_t default_enumeration_ceiling() {
  if (const char* env = std::getenv("CSR_ENUM_CEILING")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return builtin_enumeration_ceiling;
}

struct EnumerationOptions {
  std::size_t ceiling = 0;  // 0: default_enumeration_ceiling()
  bool allow_above_ceiling = false;
  unsigned workers = 1;
};

// Isomorph-free generation of graphs on `order` vertices with minimum degree
// at least `min_deg`, by canonical augmentation.
//
// The generator works on complements: min degree >= d in G is max degree
// <= order-1-d in the complement H, and bounded max degree is hereditary, so
// every vertex-deleted subgraph of an admissible H is admissible and the
// degree bound prunes every level. A child H + v is kept iff v lies in the
// automorphism orbit of the canonical deletion vertex (the minimum-degree
// vertex with the latest canonical position), which makes each class's parent
// unique; isomorphic siblings are then dropped by canonical form.
//
// The generation tree is cut at a fixed level into subtrees that are
// processed independently. Output order (subtree by subtree, depth first)
// is the same for every worker count.
class Enumerator {
 public:
  Enumerator(std::size_t order, std::size_t min_deg, EnumerationOptions opts = {})
      : order_(order), min_deg_(min_deg), opts_(opts) {
    const std::size_t ceiling = opts.ceiling == 0 ? default_enumeration_ceiling() : opts.ceiling;
    if (order > ceiling && !opts.allow_above_ceiling)
      throw CeilingError("enumeration of order " + std::to_string(order) + " exceeds the ceiling " +
                         std::to_string(ceiling) + "; raise CSR_ENUM_CEILING or pass an override");
    if (order > SmallGraph::max_order)
      throw CeilingError("enumeration supports at most " + std::to_string(SmallGraph::max_order) + " vertices");
    if (order == 0 || min_deg > order - 1) {
      empty_ = order != 0 || min_deg > 0;
      if (!empty_) roots_.push_back(SmallGraph{});
      return;
    }
    max_deg_ = static_cast<int>(order - 1 - min_deg);
    build_roots();
  }

  std::size_t order() const { return order_; }
  std::size_t min_degree() const { return min_deg_; }
  std::size_t subtree_count() const { return roots_.size(); }

  // visit(const Graph&) -> bool; returning false stops this subtree.
  // Returns false iff the visitor stopped early.
  template <class Visitor>
  bool visit_subtree(std::size_t i, Visitor&& visit) const {
    return descend(roots_[i], visit);
  }

  template <class Visitor>
  bool visit_all(Visitor&& visit) const {
    for (std::size_t i = 0; i < roots_.size(); ++i)
      if (!visit_subtree(i, visit)) return false;
    return true;
  }

  // fn(const Graph&) on every class, run in parallel across subtrees;
  // results in enumeration order.
  template <class Fn>
  auto map(Fn&& fn) const {
    using R = std::invoke_result_t<Fn&, const Graph&>;
    std::vector<std::vector<R>> per(roots_.size());
    parallel_for(roots_.size(), opts_.workers, [&](std::size_t i) {
      visit_subtree(i, [&](const Graph& g) {
        per[i].push_back(fn(g));
        return true;
      });
    });
    std::vector<R> out;
    for (auto& v : per)
      for (auto& r : v) out.push_back(std::move(r));
    return out;
  }

 private:
  // Subtrees are cut where a level first holds this many nodes.
  static constexpr std::size_t split_width = 64;

  Graph emit(const SmallGraph& h) const { return to_graph(small_complement(h)); }

  template <class F>
  void children(const SmallGraph& parent, F&& take) const {
    const int p = parent.order;
    std::uint32_t eligible = 0;
    for (int v = 0; v < p; ++v)
      if (parent.degree(v) < max_deg_) eligible |= 1U << v;
    std::vector<SmallGraph> seen;
    std::uint32_t s = 0;
    do {
      const int ds = std::popcount(s);
      if (ds <= max_deg_) {
        int mind = ds;
        for (int v = 0; v < p; ++v) mind = std::min(mind, parent.degree(v) + static_cast<int>((s >> v) & 1U));
        if (ds == mind) {
          SmallGraph c = parent;
          c.order = p + 1;
          c.rows[p] = s;
          for (int v = 0; v < p; ++v)
            if ((s >> v) & 1U) c.rows[v] |= 1U << p;
          auto canon = canonical_labeling(c);
          int deletion = -1;
          for (int i = p; i >= 0; --i)
            if (c.degree(canon.lab[i]) == mind) {
              deletion = canon.lab[i];
              break;
            }
          if (canon.orbit[p] == canon.orbit[deletion]) {
            bool dup = false;
            for (const auto& f : seen) dup = dup || f == canon.form;
            if (!dup) {
              seen.push_back(canon.form);
              take(canon.form);
            }
          }
        }
      }
      s = (s - eligible) & eligible;
    } while (s != 0);
  }

  template <class Visitor>
  bool descend(const SmallGraph& node, Visitor& visit) const {
    if (static_cast<std::size_t>(node.order) == order_) return visit(emit(node));
    bool keep_going = true;
    children(node, [&](const SmallGraph& c) {
      if (keep_going) keep_going = descend(c, visit);
    });
    return keep_going;
  }

  void build_roots() {
    SmallGraph single;
    single.order = 1;
    std::vector<SmallGraph> level{single};
    while (static_cast<std::size_t>(level.front().order) < order_ && level.size() < split_width) {
      std::vector<SmallGraph> next;
      for (const auto& g : level) children(g, [&](const SmallGraph& c) { next.push_back(c); });
      if (next.empty()) break;
      level = std::move(next);
    }
    roots_ = std::move(level);
  }

  std::size_t order_;
  std::size_t min_deg_;
  EnumerationOptions opts_;
  int max_deg_ = 0;
  bool empty_ = false;
  std::vector<SmallGraph> roots_;
};

inline std::vector<Graph> enumerate_graphs(std::size_t order, std::size_t min_deg, EnumerationOptions opts = {}) {
  return Enumerator(order, min_deg, opts).map([](const Graph& g) { return g; });
}

inline std::size_t count_graphs(std::size_t order, std::size_t min_deg, EnumerationOptions opts = {}) {
  return Enumerator(order, min_deg, opts).map([](const Graph&) { return 0; }).size();
}

}  // namespace csr

#endif  // CSR_ENUMERATE_HPP
