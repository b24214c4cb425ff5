#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "csr/certificate.hpp"

namespace {

enum Exit : int { ok = 0, refuted = 1, usage = 2, exhausted = 3 };

struct Io {
  std::string in_path, out_path;
  std::ifstream in_file;
  std::ofstream out_file;

  std::istream& in() {
    if (in_path.empty() || in_path == "-") return std::cin;
    if (!in_file.is_open()) {
      in_file.open(in_path);
      if (!in_file) throw std::runtime_error("cannot open " + in_path);
    }
    return in_file;
  }
  std::ostream& out() {
    if (out_path.empty() || out_path == "-") return std::cout;
    if (!out_file.is_open()) {
      out_file.open(out_path);
      if (!out_file) throw std::runtime_error("cannot open " + out_path);
    }
    return out_file;
  }
};

// Combines per-line outcomes: parse errors dominate, then exhausted budgets,
// then refutations.
struct Worst {
  int code = Exit::ok;
  void note(int c) {
    auto rank = [](int x) { return x == Exit::usage ? 3 : x == Exit::exhausted ? 2 : x == Exit::refuted ? 1 : 0; };
    if (rank(c) > rank(code)) code = c;
  }
};

csr::json error_record(std::size_t line, const std::string& message) {
  return csr::json{{"schema", csr::schema_version}, {"kind", "error"}, {"line", line}, {"message", message}};
}

// Calls fn(line_number, text) for every non-blank line.
template <class Fn>
void each_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    fn(no, line);
  }
}

template <class Fn>
int per_graph(Io& io, Fn&& fn) {
  Worst worst;
  each_line(io.in(), [&](std::size_t no, const std::string& line) {
    csr::Graph g;
    try {
      g = csr::from_graph6(line);
    } catch (const std::exception& e) {
      io.out() << error_record(no, e.what()).dump() << '\n';
      worst.note(Exit::usage);
      return;
    }
    worst.note(fn(g));
  });
  return worst.code;
}

std::size_t effective_ceiling(std::size_t flag) { return flag != 0 ? flag : csr::default_enumeration_ceiling(); }

void warn_above_ceiling(bool allow) {
  if (allow)
    std::cerr << "WARNING: enumeration ceiling disabled; runs above order " << csr::default_enumeration_ceiling()
              << " can take days\n";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Even-cycle versus star Ramsey toolkit: constructions, certificates, exhaustive search"};
  app.require_subcommand(1);
  app.fallthrough();

  Io io;
  unsigned workers = csr::default_workers();
  std::uint64_t node_budget = 0;
  app.add_option("--workers", workers, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--out", io.out_path, "Write results here instead of stdout");

  std::size_t ell = 0, n = 0;
  auto add_params = [&](CLI::App* c) {
    c->add_option("--ell", ell, "Half the cycle length")->required();
    c->add_option("--n", n, "Number of star leaves")->required();
  };
  auto add_input = [&](CLI::App* c) { c->add_option("--in", io.in_path, "graph6 input file (default stdin)"); };
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--node-budget", node_budget, "Per-search node limit (0: unlimited)");
  };

  std::string construct_kind, envelope_path;
  auto* construct = app.add_subcommand("construct", "Print H1 or H2 as graph6");
  construct->add_option("kind", construct_kind, "h1 or h2")->required()->check(CLI::IsMember({"h1", "h2"}));
  add_params(construct);
  construct->add_option("--envelope", envelope_path, "Also write the certification envelope to this file");

  auto* check = app.add_subcommand("check", "Certify graph6 inputs as lower-bound witnesses");
  add_params(check);
  add_input(check);
  add_budget(check);

  auto* formula = app.add_subcommand("formula", "Evaluate f_t(ell, n) and its parameters");
  add_params(formula);

  std::uint64_t max_classes = 0;
  std::size_t ceiling = 0;
  bool above_ceiling = false;
  std::string resume;
  auto add_enum = [&](CLI::App* c) {
    c->add_option("--ceiling", ceiling, "Enumeration ceiling (default CSR_ENUM_CEILING or 10)");
    c->add_flag("--allow-above-ceiling", above_ceiling, "Enumerate beyond the ceiling");
  };
  auto* ramsey = app.add_subcommand("ramsey", "Exact R(C_2ell, K_1,n) by exhaustive search");
  add_params(ramsey);
  add_enum(ramsey);
  add_budget(ramsey);
  ramsey->add_option("--max-classes", max_classes, "Stop after this many classes (0: unlimited)");
  ramsey->add_option("--resume", resume, "Resume token from an interrupted run");

  std::size_t order = 0;
  std::string mode = "exact";
  auto* turan = app.add_subcommand("turan", "Exact ex(N, C_2ell) or ex(N, C_>=2ell)");
  turan->add_option("--order", order, "Number of vertices")->required();
  turan->add_option("--ell", ell, "Half the cycle length")->required();
  turan->add_option("--mode", mode, "exact or at-least")->check(CLI::IsMember({"exact", "at-least"}));
  add_enum(turan);

  std::string lemma_id;
  std::optional<std::size_t> max_order, min_order;
  std::size_t k_min = 2, k_max = 4, max_v = 12, max_s = 4, eg_ell = 2;
  std::size_t ell_min = 2, ell_max = 3, n_min = 2, n_max = 6;
  bool table = false;
  auto* verify = app.add_subcommand("verify", "Run a lemma suite");
  verify->add_option("lemma", lemma_id, "vz, bc, williamson, dec, set_system, theorem_probe, erdos_gallai")->required();
  verify->add_option("--max-order", max_order, "Largest order swept");
  verify->add_option("--min-order", min_order, "Smallest order swept (erdos_gallai)");
  verify->add_option("--k-min", k_min, "dec: smallest k");
  verify->add_option("--k-max", k_max, "dec: largest k");
  verify->add_option("--max-v", max_v, "set_system: largest ground set");
  verify->add_option("--max-s", max_s, "set_system: most parts");
  verify->add_option("--ell", eg_ell, "erdos_gallai: half the cycle length");
  verify->add_option("--ell-min", ell_min, "theorem_probe: smallest ell");
  verify->add_option("--ell-max", ell_max, "theorem_probe: largest ell");
  verify->add_option("--n-min", n_min, "theorem_probe: smallest n");
  verify->add_option("--n-max", n_max, "theorem_probe: largest n");
  verify->add_flag("--table", table, "Print a human-readable table instead of JSON");
  add_enum(verify);
  add_budget(verify);

  std::size_t dec_k = 0;
  bool unchecked = false;
  auto* decompose = app.add_subcommand("decompose", "Split into few 2-connected pieces");
  decompose->add_option("--k", dec_k, "Piece bound k")->required();
  decompose->add_flag("--unchecked", unchecked, "Run even when the degree hypothesis fails");
  add_input(decompose);

  auto* closure = app.add_subcommand("closure", "Bondy-Chvatal closure");
  add_input(closure);
  auto* blocks = app.add_subcommand("blocks", "Blocks and cut vertices");
  add_input(blocks);
  auto* ec = app.add_subcommand("ec", "Longest even cycle");
  add_input(ec);
  add_budget(ec);

  auto* revalidate = app.add_subcommand("revalidate", "Re-check envelopes from scratch");
  add_input(revalidate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? Exit::ok : Exit::usage;
  }

  if (const char* env = std::getenv("CSR_ENUM_CEILING"))
    std::cerr << "warning: CSR_ENUM_CEILING=" << env << " sets the enumeration ceiling to "
              << csr::default_enumeration_ceiling() << '\n';

  const csr::SearchBudget budget{node_budget};
  csr::EnumerationOptions enum_opts;
  enum_opts.ceiling = ceiling;
  enum_opts.allow_above_ceiling = above_ceiling;
  enum_opts.workers = workers;

  try {
    if (*construct) {
      auto p = csr::ParamTriple::make(ell, n);
      csr::Graph g = construct_kind == "h1" ? csr::build_h1(p) : csr::build_h2(p);
      io.out() << csr::to_graph6(g) << '\n';
      if (!envelope_path.empty()) {
        std::ofstream env(envelope_path);
        if (!env) throw std::runtime_error("cannot open " + envelope_path);
        env << csr::lower_bound_envelope(g, p, csr::certify_lower_bound(g, p)).dump() << '\n';
      }
      return Exit::ok;
    }
    if (*check) {
      auto p = csr::ParamTriple::make(ell, n);
      return per_graph(io, [&](const csr::Graph& g) {
        auto r = csr::certify_lower_bound(g, p, budget);
        io.out() << csr::lower_bound_envelope(g, p, r).dump() << '\n';
        switch (r.status()) {
          case csr::CertStatus::certified: return Exit::ok;
          case csr::CertStatus::refuted: return Exit::refuted;
          case csr::CertStatus::indeterminate: return Exit::exhausted;
        }
        return Exit::usage;
      });
    }
    if (*formula) {
      io.out() << csr::formula_envelope(csr::ParamTriple::make(ell, n)).dump() << '\n';
      return Exit::ok;
    }
    if (*ramsey) {
      warn_above_ceiling(above_ceiling);
      csr::SearchOptions so;
      so.enumeration = enum_opts;
      so.cycle_budget = budget;
      so.max_classes = max_classes;
      if (!resume.empty()) so.resume_token = resume;
      const auto t0 = std::chrono::steady_clock::now();
      std::cerr << "ramsey: ell=" << ell << " n=" << n << " workers=" << workers << '\n';
      auto r = csr::ramsey_number(ell, n, so);
      const double secs = seconds_since(t0);
      std::cerr << "ramsey: " << r.upper_classes << " classes at order " << r.upper_order << " in " << secs << " s ("
                << (secs > 0 ? static_cast<double>(r.upper_classes) / secs : 0.0) << " graphs/s)\n";
      if (!r.final) std::cerr << "ramsey: non-final result: " << r.note << '\n';
      io.out() << csr::ramsey_envelope(r, effective_ceiling(ceiling)).dump() << '\n';
      return r.final ? Exit::ok : Exit::exhausted;
    }
    if (*turan) {
      warn_above_ceiling(above_ceiling);
      csr::SearchOptions so;
      so.enumeration = enum_opts;
      auto r = csr::turan_number(order, ell, mode == "exact" ? csr::CycleBound::exact_2ell : csr::CycleBound::at_least_2ell,
                                 so);
      io.out() << csr::turan_envelope(r).dump() << '\n';
      return Exit::ok;
    }
    if (*verify) {
      auto id = csr::lemma_from_string(lemma_id);
      if (!id) {
        std::cerr << "unknown lemma id '" << lemma_id
                  << "'; valid ids: vz, bc, williamson, dec, set_system, theorem_probe, erdos_gallai\n";
        return Exit::usage;
      }
      warn_above_ceiling(above_ceiling);
      csr::HarnessOptions ho;
      ho.workers = workers;
      ho.cycle_budget = budget;
      ho.ceiling = ceiling;
      const auto t0 = std::chrono::steady_clock::now();
      csr::LemmaReport rep;
      switch (*id) {
        case csr::LemmaId::vz: rep = csr::verify_vz(max_order.value_or(8), ho); break;
        case csr::LemmaId::bc: rep = csr::verify_bc(max_order.value_or(8), ho); break;
        case csr::LemmaId::williamson: rep = csr::verify_williamson(max_order.value_or(9), ho); break;
        case csr::LemmaId::dec: rep = csr::verify_dec(max_order.value_or(8), k_min, k_max, ho); break;
        case csr::LemmaId::set_system: rep = csr::verify_set_system(max_v, max_s); break;
        case csr::LemmaId::theorem_probe: {
          csr::SearchOptions so;
          so.enumeration = enum_opts;
          so.cycle_budget = budget;
          rep = csr::probe_theorem({ell_min, ell_max, n_min, n_max}, so);
          break;
        }
        case csr::LemmaId::erdos_gallai:
          rep = csr::verify_erdos_gallai_structure(min_order.value_or(4), max_order.value_or(8), eg_ell, ho);
          break;
      }
      std::cerr << "verify " << lemma_id << ": " << rep.instances_checked << " instances, " << rep.failures.size()
                << " failures, " << seconds_since(t0) << " s\n";
      if (table) {
        auto& out = io.out();
        out << "lemma " << csr::to_string(rep.lemma) << "\n";
        for (const auto& [k, v] : rep.scope) out << "  " << k << " = " << v << "\n";
        out << "instances " << rep.instances_checked << "\nfailures " << rep.failures.size() << "\n";
        for (const auto& f : rep.failures) out << "  " << (f.graph6.empty() ? "-" : f.graph6) << "  " << f.detail << "\n";
        if (!rep.probe.empty()) {
          out << "ell  n  t  f_t+1  closed  computed\n";
          for (const auto& row : rep.probe) {
            out << row.ell << "  " << row.n << "  " << row.t << "  " << row.f + 1 << "  "
                << (row.closed_form ? std::to_string(*row.closed_form) : "-") << "  ";
            if (row.final)
              out << row.lo;
            else
              out << "[" << row.lo << ", " << (row.hi ? std::to_string(*row.hi) : "?") << "]";
            out << "\n";
          }
        }
      } else {
        io.out() << csr::lemma_envelope(rep).dump() << '\n';
      }
      return rep.ok() ? Exit::ok : Exit::refuted;
    }
    if (*decompose) {
      return per_graph(io, [&](const csr::Graph& g) {
        try {
          io.out() << csr::decomposition_envelope(g, csr::decompose_2connected(g, dec_k, unchecked)).dump() << '\n';
        } catch (const csr::PreconditionError& e) {
          io.out() << error_record(0, e.what()).dump() << '\n';
          return Exit::usage;
        }
        return Exit::ok;
      });
    }
    if (*closure) {
      return per_graph(io, [&](const csr::Graph& g) {
        io.out() << csr::closure_envelope(g).dump() << '\n';
        return Exit::ok;
      });
    }
    if (*blocks) {
      return per_graph(io, [&](const csr::Graph& g) {
        io.out() << csr::blocks_envelope(g).dump() << '\n';
        return Exit::ok;
      });
    }
    if (*ec) {
      return per_graph(io, [&](const csr::Graph& g) {
        auto r = csr::longest_even_cycle_with_witness(g, budget);
        io.out() << csr::longest_even_envelope(g, r).dump() << '\n';
        return r.exhausted ? Exit::exhausted : Exit::ok;
      });
    }
    if (*revalidate) {
      Worst worst;
      each_line(io.in(), [&](std::size_t no, const std::string& line) {
        csr::json env;
        try {
          env = csr::json::parse(line);
        } catch (const std::exception& e) {
          io.out() << error_record(no, e.what()).dump() << '\n';
          worst.note(Exit::usage);
          return;
        }
        auto r = csr::revalidate(env);
        io.out() << csr::json{{"line", no}, {"kind", env.value("kind", "")}, {"revalidated", r.ok}, {"detail", r.detail}}
                        .dump()
                 << '\n';
        worst.note(r.ok ? Exit::ok : Exit::refuted);
      });
      return worst.code;
    }
  } catch (const csr::CeilingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Exit::exhausted;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Exit::usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Exit::usage;
  }
  return Exit::usage;
}
