#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "edgeideal/constructions.hpp"
#include "edgeideal/enumerate.hpp"
#include "edgeideal/json_io.hpp"

using namespace edgeideal;

namespace {

// Exit codes are a stable contract: 0 success, 1 check/assertion failure,
// 2 usage or parse error, 3 desk cap exceeded.
constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2, kCapExceeded = 3;

int default_workers() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

Graph load_graph(const std::string& graph6, const std::string& edges_path) {
  if (!graph6.empty() && !edges_path.empty())
    throw std::invalid_argument("pass exactly one of --graph6 and --edges");
  if (!graph6.empty()) return graph6_decode(graph6);
  if (!edges_path.empty()) return read_edge_list_file(edges_path);
  throw std::invalid_argument("pass exactly one of --graph6 and --edges");
}

VertexSet parse_subset(const std::string& text, const Graph& g) {
  if (text == "all") return g.vertices();
  VertexSet s = 0;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0 || v >= g.n)
      throw std::invalid_argument("subset member '" + tok + "' out of range");
    s |= vbit(v);
  }
  return s;
}

void print_report_text(const InvariantReport& rep, std::ostream& out) {
  out << "n: " << rep.n << "\n"
      << "edges: " << rep.edges << "\n"
      << "alpha: " << rep.alpha << "\n"
      << "matching: " << rep.alpha_prime << "\n"
      << "cover: " << rep.cover << "\n"
      << "dim: " << rep.dim << "\n"
      << "h-polynomial: " << to_string(rep.h_poly) << "\n"
      << "deg h: " << rep.deg_h << "\n"
      << "regularity: " << rep.reg << "\n"
      << "proj dim: " << rep.proj_dim << "\n"
      << "depth: " << rep.depth << "\n"
      << "field: " << rep.field.name() << "\n";
  for (const auto& c : rep.bounds.checks)
    out << "bound " << c.name << ": " << c.lhs << " <= " << c.rhs << " "
        << (c.ok ? "ok" : "VIOLATED") << "\n";
}

struct FamilyResult {
  Graph graph;
  std::optional<Prediction> prediction;
};

FamilyResult build_family(const std::string& family, int a, int b, int d, int m,
                          int n, int r, const std::string& graph6,
                          const std::string& edges_path, const std::string& subset) {
  if (family == "kdd") {
    int left = a > 0 ? a : d;
    int right = b > 0 ? b : d;
    FamilyResult res{complete_bipartite(left, right), std::nullopt};
    if (left == right) res.prediction = kdd_prediction(left);
    return res;
  }
  if (family == "star") return {star_graph(n), star_prediction(n)};
  if (family == "matching") return {matching_graph(m), matching_prediction(m)};
  if (family == "ribbon") return {ribbon(), ribbon_prediction()};
  if (family == "gr") return {g_family(r), g_family_prediction(r)};
  if (family == "realize") return {realize(r, d), realize_prediction(r, d)};
  if (family == "cone") {
    Graph base = load_graph(graph6, edges_path);
    return {cone_over_subset(base, parse_subset(subset, base)), std::nullopt};
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-ideal invariants of finite simple graphs"};
  app.require_subcommand(1);

  std::string field_name = "GF(2)";
  int cap = kDefaultDeskCap;
  int workers = default_workers();
  app.add_option("--field", field_name, "homology field: GF(2), GF(p), QQ")
      ->envname("EDGEIDEAL_FIELD")
      ->capture_default_str();
  app.add_option("--cap", cap, "desk cap for 2^n homology scans")
      ->capture_default_str();
  app.add_option("--workers", workers, "worker threads for scans")
      ->envname("EDGEIDEAL_WORKERS")
      ->capture_default_str();

  // invariants
  auto* inv = app.add_subcommand("invariants", "compute the invariant report of one graph");
  std::string inv_graph6, inv_edges, inv_format = "text";
  inv->add_option("--graph6", inv_graph6, "graph6 string");
  inv->add_option("--edges", inv_edges, "edge-list file");
  inv->add_option("--format", inv_format, "text or json")->capture_default_str();

  // construct
  auto* con = app.add_subcommand("construct", "emit a named family graph");
  std::string family, con_graph6, con_edges, con_subset = "all", con_output = "graph6";
  int con_a = 0, con_b = 0, con_d = 0, con_m = 0, con_n = 0, con_r = 0;
  bool con_check = false;
  con->add_option("--family", family, "kdd star matching ribbon gr realize cone")
      ->required();
  con->add_option("-a", con_a, "left part size (kdd)");
  con->add_option("-b", con_b, "right part size (kdd)");
  con->add_option("-d", con_d, "d parameter (kdd, realize)");
  con->add_option("-m", con_m, "edge count (matching)");
  con->add_option("-n", con_n, "vertex count (star)");
  con->add_option("-r", con_r, "r parameter (gr, realize)");
  con->add_option("--graph6", con_graph6, "base graph for cone");
  con->add_option("--edges", con_edges, "base edge-list file for cone");
  con->add_option("--subset", con_subset, "cone subset: comma list or 'all'")
      ->capture_default_str();
  con->add_flag("--check", con_check, "verify computed invariants against the prediction");
  con->add_option("--output", con_output, "graph6 or edges")->capture_default_str();

  // enumerate
  auto* enu = app.add_subcommand("enumerate", "scan (reg, deg h) over isomorphism classes");
  int enu_n = -1;
  std::string enu_input, enu_expect_absent, enu_format = "tsv";
  bool enu_connected = false;
  enu->add_option("--n", enu_n, "vertex count to generate");
  enu->add_option("--input", enu_input, "scan this graph6 corpus instead of generating");
  enu->add_option("--expect-absent", enu_expect_absent,
                  "semicolon list of r,d pairs that must not appear");
  enu->add_flag("--connected", enu_connected, "generate connected classes only");
  enu->add_option("--format", enu_format, "tsv or json")->capture_default_str();

  // verify
  auto* ver = app.add_subcommand("verify", "batch checks over a graph6 corpus");
  std::string ver_input, ver_checks, ver_format = "text";
  ver->add_option("--input", ver_input, "graph6 file, one graph per line")->required();
  ver->add_option("--checks", ver_checks,
                  "comma list: reg-bound,sum-bound,hochster-hilbert,additivity");
  ver->add_option("--format", ver_format, "text or json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Field field = Field::gf2();
  try {
    field = parse_field(field_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (workers < 1 || cap < 0 || cap > kMaxVertices) {
    std::cerr << "error: workers must be >= 1 and cap in 0.." << kMaxVertices << "\n";
    return kUsage;
  }

  if (*inv) {
    return run_guarded([&] {
      Graph g = load_graph(inv_graph6, inv_edges);
      InvariantReport rep = invariant_report(g, field, cap, /*hard_bounds=*/false);
      if (inv_format == "json")
        std::cout << report_to_json(rep) << "\n";
      else
        print_report_text(rep, std::cout);
      return rep.bounds.all_ok() ? kOk : kCheckFailed;
    });
  }

  if (*con) {
    return run_guarded([&] {
      FamilyResult res = build_family(family, con_a, con_b, con_d, con_m, con_n,
                                      con_r, con_graph6, con_edges, con_subset);
      if (con_output == "edges")
        std::cout << to_edge_list(res.graph);
      else
        std::cout << graph6_encode(res.graph) << "\n";
      if (!con_check) return kOk;

      if (family == "cone") {
        Graph base = load_graph(con_graph6, con_edges);
        VertexSet s = parse_subset(con_subset, base);
        auto hyp = lemma_a_applicable(base, s, field, cap);
        if (!hyp.all()) {
          std::cerr << "cone-update hypotheses not all satisfied; nothing to check\n";
          return kOk;
        }
        auto predicted = lemma_a_predict(h_polynomial(base), alpha(base));
        if (!(hilbert_series(res.graph) == predicted.series)) {
          std::cerr << "check failed: cone series " << to_string(hilbert_series(res.graph))
                    << " != predicted " << to_string(predicted.series) << "\n";
          return kCheckFailed;
        }
        if (res.graph.n <= cap &&
            regularity(res.graph, field, cap, workers) != regularity(base, field, cap, workers)) {
          std::cerr << "check failed: cone changed the regularity\n";
          return kCheckFailed;
        }
        std::cerr << "checks passed\n";
        return kOk;
      }

      if (!res.prediction) {
        std::cerr << "no prediction recorded for this family instance\n";
        return kOk;
      }
      const Prediction& p = *res.prediction;
      bool ok = true;
      if (p.series && !(hilbert_series(res.graph) == *p.series)) {
        std::cerr << "check failed: series " << to_string(hilbert_series(res.graph))
                  << " != predicted " << to_string(*p.series) << "\n";
        ok = false;
      }
      if (p.deg_h && deg_h(res.graph) != *p.deg_h) {
        std::cerr << "check failed: deg h " << deg_h(res.graph) << " != predicted "
                  << *p.deg_h << "\n";
        ok = false;
      }
      if (p.reg) {
        int reg_actual = regularity(res.graph, field, cap, workers);
        if (reg_actual != *p.reg) {
          std::cerr << "check failed: reg " << reg_actual << " != predicted " << *p.reg
                    << "\n";
          ok = false;
        }
      }
      if (ok) std::cerr << "checks passed\n";
      return ok ? kOk : kCheckFailed;
    });
  }

  if (*enu) {
    return run_guarded([&] {
      RealizabilityTable table;
      ProgressFn progress = [](long long done, long long total) {
        std::cerr << "scanned " << done << "/" << total << " graphs\r" << std::flush;
      };
      if (!enu_input.empty()) {
        std::ifstream in(enu_input);
        if (!in) throw std::invalid_argument("cannot open " + enu_input);
        table = scan_corpus(read_graph6_lines(in), field, workers, cap, progress);
      } else {
        if (enu_n < 0) throw std::invalid_argument("pass --n or --input");
        table = scan(enu_n, field, workers, enu_connected, progress);
      }
      std::cerr << "\n";
      if (enu_format == "json")
        std::cout << table_to_json(table) << "\n";
      else
        std::cout << to_tsv(table);

      if (!enu_expect_absent.empty()) {
        std::stringstream ss(enu_expect_absent);
        std::string pair_text;
        bool violated = false;
        while (std::getline(ss, pair_text, ';')) {
          if (pair_text.empty()) continue;
          int r, d;
          char comma;
          std::stringstream ps(pair_text);
          if (!(ps >> r >> comma >> d) || comma != ',')
            throw std::invalid_argument("bad --expect-absent entry '" + pair_text + "'");
          auto it = table.counts.find({r, d});
          if (it != table.counts.end()) {
            std::cerr << "expected (" << r << "," << d << ") absent but found "
                      << it->second.count << " classes, witness "
                      << it->second.witness << "\n";
            violated = true;
          }
        }
        if (violated) return kCheckFailed;
      }
      return kOk;
    });
  }

  if (*ver) {
    return run_guarded([&] {
      std::ifstream in(ver_input);
      if (!in) throw std::invalid_argument("cannot open " + ver_input);
      std::vector<std::string> checks;
      std::stringstream ss(ver_checks);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) checks.push_back(tok);
      CorpusReport report = verify_corpus(in, field, checks, cap);
      if (ver_format == "json") {
        std::cout << corpus_report_to_json(report) << "\n";
      } else {
        for (const auto& c : report.checks) {
          std::cout << c.name << ": " << c.passed << " passed, " << c.failed
                    << " failed\n";
          for (const auto& failure : c.failures) std::cout << "  " << failure << "\n";
        }
      }
      return report.all_ok() ? kOk : kCheckFailed;
    });
  }

  return kUsage;
}
