#ifndef CSR_CERTIFICATE_HPP
#define CSR_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "csr/constructions.hpp"
#include "csr/cycles.hpp"
#include "csr/graph6.hpp"
#include "csr/harness.hpp"
#include "csr/search.hpp"
#include "csr/structure.hpp"
#include "csr/validate.hpp"

namespace csr {

using json = nlohmann::json;

inline constexpr int schema_version = 1;
inline constexpr const char* tool_version = "0.1.0";

// Envelope layout (one JSON object per line):
//   { "schema": 1, "kind": ..., "tool_version": ..., "params": {...},
//     "payload": {...}, "verified": bool }
// `verified` is filled in by re-running revalidate() on the finished envelope.
inline json make_envelope(const std::string& kind, json params, json payload) {
  return json{{"schema", schema_version},
              {"kind", kind},
              {"tool_version", tool_version},
              {"params", std::move(params)},
              {"payload", std::move(payload)},
              {"verified", false}};
}

struct Revalidation {
  bool ok = false;
  std::string detail;
};

Revalidation revalidate(const json& envelope);

inline json& seal(json& env) {
  env["verified"] = revalidate(env).ok;
  return env;
}

namespace detail {

inline json vertices_json(const std::vector<Vertex>& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v);
  return a;
}

inline std::vector<Vertex> vertices_from(const json& a) {
  std::vector<Vertex> out;
  for (const auto& v : a) out.push_back(v.get<Vertex>());
  return out;
}

inline json params_json(const ParamTriple& p) {
  return json{{"ell", p.ell()}, {"n", p.n()}, {"t", p.t()}, {"k", p.k()}, {"m", p.m()}};
}

inline json report_payload(const Graph& g, const ParamTriple& p, const LowerBoundReport& r) {
  json pl{{"graph6", to_graph6(g)},
          {"order", g.order()},
          {"cycle_length", p.cycle_length()},
          {"cycle_search", to_string(r.cycle_search)},
          {"cycle", r.cycle_witness ? vertices_json(r.cycle_witness->vertices) : json(nullptr)},
          {"star_free", r.star_free},
          {"star", nullptr},
          {"certified_bound", r.certified_bound ? json(*r.certified_bound) : json(nullptr)},
          {"status", to_string(r.status())}};
  if (r.star_witness) pl["star"] = json{{"center", r.star_witness->center}, {"leaves", vertices_json(r.star_witness->leaves)}};
  return pl;
}

inline json lemma_payload(const LemmaReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back(json{{"graph6", f.graph6}, {"detail", f.detail}});
  json scope = json::object();
  for (const auto& [k, v] : r.scope) scope[k] = v;
  json pl{{"lemma", to_string(r.lemma)},
          {"instances_checked", r.instances_checked},
          {"failures", failures},
          {"scope", scope}};
  if (r.lemma == LemmaId::theorem_probe) {
    json rows = json::array();
    for (const auto& row : r.probe) {
      auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
      rows.push_back(json{{"ell", row.ell},
                          {"n", row.n},
                          {"t", row.t},
                          {"f_t", row.f},
                          {"f_t_plus_1", row.f + 1},
                          {"closed_form", opt(row.closed_form)},
                          {"final", row.final},
                          {"value", row.final ? json(row.lo) : json(nullptr)},
                          {"lo", row.lo},
                          {"hi", opt(row.hi)},
                          {"matches_formula", opt(row.matches_formula)},
                          {"matches_closed_form", opt(row.matches_closed_form)}});
    }
    pl["probe"] = rows;
  }
  return pl;
}

inline long long scope_value(const json& scope, const char* key) { return scope.at(key).get<long long>(); }

}  // namespace detail

// Lower-bound check of one graph. Kind: freeness when certified, even_cycle
// when a C_{2ell} refutes it, star when only the complement star does.
inline json lower_bound_envelope(const Graph& g, const ParamTriple& p, const LowerBoundReport& r) {
  std::string kind = r.status() == CertStatus::certified ? "freeness"
                     : r.cycle_search == SearchStatus::found ? "even_cycle"
                     : !r.star_free                           ? "star"
                                                              : "freeness";
  json env = make_envelope(kind, detail::params_json(p), detail::report_payload(g, p, r));
  env["payload"]["claim"] = "lower_bound";
  return seal(env);
}

inline json longest_even_envelope(const Graph& g, const LongestEven& ec) {
  json env = make_envelope("even_cycle", json::object(),
                           json{{"claim", "longest_even"},
                                {"graph6", to_graph6(g)},
                                {"order", g.order()},
                                {"length", ec.length},
                                {"cycle", ec.witness ? detail::vertices_json(ec.witness->vertices) : json::array()},
                                {"exhausted", ec.exhausted}});
  return seal(env);
}

inline json decomposition_envelope(const Graph& g, const Decomposition& d) {
  json comps = json::array();
  for (const auto& c : d.components) comps.push_back(detail::vertices_json(c));
  json env = make_envelope("decomposition", json{{"k", d.k}},
                           json{{"graph6", to_graph6(g)},
                                {"order", g.order()},
                                {"removed", detail::vertices_json(d.removed)},
                                {"components", comps},
                                {"s", d.s()},
                                {"hypothesis_held", d.hypothesis_held}});
  return seal(env);
}

inline json closure_envelope(const Graph& g) {
  Graph c = bc_closure(g);
  json added = json::array();
  for (auto [u, v] : c.edges())
    if (!g.adjacent(u, v)) added.push_back(json::array({u, v}));
  json env = make_envelope("closure", json::object(),
                           json{{"graph6", to_graph6(g)}, {"closure_graph6", to_graph6(c)}, {"added_edges", added}});
  return seal(env);
}

inline json blocks_envelope(const Graph& g) {
  auto bt = blocks(g);
  json bl = json::array();
  for (const auto& b : bt.blocks) bl.push_back(detail::vertices_json(b));
  json env = make_envelope("blocks", json::object(),
                           json{{"graph6", to_graph6(g)},
                                {"blocks", bl},
                                {"cut_vertices", detail::vertices_json(bt.cut_vertices)},
                                {"two_connected", is_2connected(g)}});
  return seal(env);
}

inline json formula_envelope(const ParamTriple& p) {
  auto cf = closed_form_value(p);
  json env = make_envelope("formula", detail::params_json(p),
                           json{{"t", p.t()},
                                {"k", p.k()},
                                {"m", p.m()},
                                {"f", f_t(p)},
                                {"clique_term", p.t() * p.clique_order()},
                                {"star_term", p.n() + (p.n() - 1) / p.t()},
                                {"regime", to_string(regime(p))},
                                {"theorem_prediction", p.t() >= 2 ? json(f_t(p) + 1) : json(nullptr)},
                                {"closed_form", cf ? json(*cf) : json(nullptr)}});
  return seal(env);
}

inline json ramsey_envelope(const RamseyResult& r, std::size_t ceiling) {
  const ParamTriple p = ParamTriple::make(r.ell, r.n);
  json params = detail::params_json(p);
  params["ceiling"] = ceiling;
  json env = make_envelope("ramsey", params,
                           json{{"final", r.final},
                                {"value", r.value ? json(*r.value) : json(nullptr)},
                                {"lo", r.lo},
                                {"hi", r.hi ? json(*r.hi) : json(nullptr)},
                                {"lower_witness", to_graph6(r.lower_witness)},
                                {"lower_source", r.lower_source},
                                {"upper",
                                 json{{"order", r.upper_order},
                                      {"classes_examined", r.upper_classes},
                                      {"verdict", to_string(r.upper_verdict)}}},
                                {"note", r.note}});
  return seal(env);
}

inline json turan_envelope(const TuranResult& t) {
  json ex = json::array();
  for (const auto& g : t.extremal_examples) ex.push_back(to_graph6(g));
  json env = make_envelope("turan", json{{"order", t.order}, {"ell", t.ell}, {"mode", to_string(t.mode)}},
                           json{{"max_edges", t.max_edges}, {"extremal_examples", ex}});
  return seal(env);
}

inline json lemma_envelope(const LemmaReport& r) {
  json env = make_envelope("lemma_report", json::object(), detail::lemma_payload(r));
  return seal(env);
}

// Re-runs the lemma named in a report with the bounds recorded in its scope.
inline LemmaReport rerun_lemma(const json& payload, const HarnessOptions& o = {}) {
  const std::string id = payload.at("lemma").get<std::string>();
  const json& sc = payload.at("scope");
  auto u = [&](const char* k) { return static_cast<std::size_t>(detail::scope_value(sc, k)); };
  auto lemma = lemma_from_string(id);
  if (!lemma) throw std::invalid_argument("unknown lemma id " + id);
  switch (*lemma) {
    case LemmaId::vz: return verify_vz(u("max_order"), o);
    case LemmaId::bc: return verify_bc(u("max_order"), o);
    case LemmaId::williamson: return verify_williamson(u("max_order"), o);
    case LemmaId::dec: return verify_dec(u("max_order"), u("k_min"), u("k_max"), o);
    case LemmaId::set_system: return verify_set_system(u("max_V"), u("max_s"));
    case LemmaId::theorem_probe: {
      SearchOptions so;
      so.enumeration.workers = o.workers;
      return probe_theorem(ProbeRange{u("ell_min"), u("ell_max"), u("n_min"), u("n_max")}, so);
    }
    case LemmaId::erdos_gallai: return verify_erdos_gallai_structure(u("min_order"), u("max_order"), u("ell"), o);
  }
  throw std::invalid_argument("unknown lemma id " + id);
}

// Checks an envelope's payload against its graph from scratch, using the
// validators and fresh searches rather than anything stored in the payload.
inline Revalidation revalidate(const json& env) {
  auto fail = [](std::string why) { return Revalidation{false, std::move(why)}; };
  try {
    if (env.at("schema").get<int>() != schema_version) return fail("unsupported schema");
    const std::string kind = env.at("kind").get<std::string>();
    const json& pl = env.at("payload");
    const json& params = env.at("params");

    if (kind == "freeness" || kind == "star" || (kind == "even_cycle" && pl.value("claim", "") == "lower_bound")) {
      Graph g = from_graph6(pl.at("graph6").get<std::string>());
      auto p = ParamTriple::make(params.at("ell").get<std::size_t>(), params.at("n").get<std::size_t>());
      if (!pl.at("cycle").is_null())
        if (auto e = validate::cycle(g, detail::vertices_from(pl.at("cycle")), p.cycle_length()))
          return fail("cycle witness: " + *e);
      if (!pl.at("star").is_null())
        if (auto e = validate::complement_star(g, pl["star"].at("center").get<Vertex>(),
                                               detail::vertices_from(pl["star"].at("leaves")), p.n()))
          return fail("star witness: " + *e);
      auto fresh = certify_lower_bound(g, p);
      if (std::string(to_string(fresh.status())) != pl.at("status").get<std::string>())
        return fail("status differs on recomputation");
      if (fresh.cycle_free() != pl.at("cycle").is_null()) return fail("cycle verdict differs");
      if (fresh.star_free != pl.at("star_free").get<bool>()) return fail("star verdict differs");
      return {true, "ok"};
    }
    if (kind == "even_cycle") {
      Graph g = from_graph6(pl.at("graph6").get<std::string>());
      const std::size_t len = pl.at("length").get<std::size_t>();
      auto cyc = detail::vertices_from(pl.at("cycle"));
      if (len > 0) {
        if (len % 2 != 0) return fail("odd length");
        if (auto e = validate::cycle(g, cyc, len)) return fail("cycle witness: " + *e);
      } else if (!cyc.empty()) {
        return fail("witness given for length 0");
      }
      if (pl.value("exhausted", false)) return fail("search was not exhaustive");
      if (longest_even_cycle(g) != len) return fail("longest even cycle differs on recomputation");
      return {true, "ok"};
    }
    if (kind == "decomposition") {
      Graph g = from_graph6(pl.at("graph6").get<std::string>());
      std::vector<std::vector<Vertex>> comps;
      for (const auto& c : pl.at("components")) comps.push_back(detail::vertices_from(c));
      auto removed = detail::vertices_from(pl.at("removed"));
      const std::size_t k = params.at("k").get<std::size_t>();
      const bool hyp = decomposition_hypothesis(g, k);
      if (hyp != pl.at("hypothesis_held").get<bool>()) return fail("hypothesis flag differs");
      if (auto e = validate::decomposition(g, removed, comps)) {
        if (hyp) return fail(*e);
        return fail("unchecked decomposition is not valid: " + *e);
      }
      if (hyp && comps.size() >= k) return fail("s >= k");
      return {true, "ok"};
    }
    if (kind == "closure") {
      Graph g = from_graph6(pl.at("graph6").get<std::string>());
      Graph c = from_graph6(pl.at("closure_graph6").get<std::string>());
      if (c.order() != g.order()) return fail("order differs");
      for (auto [u, v] : g.edges())
        if (!c.adjacent(u, v)) return fail("closure drops an edge");
      // Stable: no remaining non-adjacent pair reaches the degree-sum threshold.
      for (Vertex u = 0; u < c.order(); ++u)
        for (Vertex v = u + 1; v < c.order(); ++v)
          if (!c.adjacent(u, v) && c.degree(u) + c.degree(v) >= c.order()) return fail("closure not stable");
      if (bc_closure(g) != c) return fail("closure differs on recomputation");
      return {true, "ok"};
    }
    if (kind == "blocks") {
      Graph g = from_graph6(pl.at("graph6").get<std::string>());
      auto bt = blocks(g);
      std::vector<std::vector<Vertex>> listed;
      for (const auto& b : pl.at("blocks")) listed.push_back(detail::vertices_from(b));
      if (listed != bt.blocks) return fail("blocks differ on recomputation");
      if (detail::vertices_from(pl.at("cut_vertices")) != bt.cut_vertices) return fail("cut vertices differ");
      // Cut vertices by definition: deleting them disconnects their component.
      for (Vertex v : bt.cut_vertices) {
        std::vector<Vertex> rest;
        for (Vertex x = 0; x < g.order(); ++x)
          if (x != v) rest.push_back(x);
        if (connected_components(induced_subgraph(g, rest)).size() <= connected_components(g).size())
          return fail("listed cut vertex does not separate");
      }
      return {true, "ok"};
    }
    if (kind == "formula") {
      auto p = ParamTriple::make(params.at("ell").get<std::size_t>(), params.at("n").get<std::size_t>());
      if (pl.at("f").get<std::size_t>() != f_t(p)) return fail("f differs");
      if (pl.at("regime").get<std::string>() != to_string(regime(p))) return fail("regime differs");
      return {true, "ok"};
    }
    if (kind == "ramsey") {
      const std::size_t ell = params.at("ell").get<std::size_t>(), n = params.at("n").get<std::size_t>();
      auto p = ParamTriple::make(ell, n);
      Graph w = from_graph6(pl.at("lower_witness").get<std::string>());
      const std::size_t lo = pl.at("lo").get<std::size_t>();
      if (w.order() + 1 != lo) return fail("lower witness order is not lo - 1");
      if (certify_lower_bound(w, p).status() != CertStatus::certified) return fail("lower witness does not certify");
      if (pl.at("final").get<bool>()) {
        const std::size_t value = pl.at("value").get<std::size_t>();
        if (value != lo) return fail("final value differs from lo");
        SearchOptions so;
        so.enumeration.ceiling = params.at("ceiling").get<std::size_t>();
        if (verify_upper_at(value, ell, n, so).verdict != Verdict::pass) return fail("upper verification fails");
      }
      return {true, "ok"};
    }
    if (kind == "turan") {
      auto mode = params.at("mode").get<std::string>() == "exact_2ell" ? CycleBound::exact_2ell : CycleBound::at_least_2ell;
      const std::size_t ell = params.at("ell").get<std::size_t>();
      auto t = turan_number(params.at("order").get<std::size_t>(), ell, mode);
      if (t.max_edges != pl.at("max_edges").get<std::size_t>()) return fail("max_edges differs");
      for (const auto& s : pl.at("extremal_examples")) {
        Graph g = from_graph6(s.get<std::string>());
        if (g.edge_count() != t.max_edges || !avoids(g, ell, mode)) return fail("extremal example invalid");
      }
      return {true, "ok"};
    }
    if (kind == "lemma_report") {
      auto fresh = rerun_lemma(pl);
      json again = detail::lemma_payload(fresh);
      if (again != pl) return fail("lemma report differs on rerun");
      return {true, "ok"};
    }
    return fail("unknown kind " + kind);
  } catch (const std::exception& e) {
    return fail(std::string("malformed envelope: ") + e.what());
  }
}

}  // namespace csr

#endif  // CSR_CERTIFICATE_HPP
