#include "edgeideal/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace edgeideal {

namespace {

// Column code of vertex v against the first k placed vertices: the k
// adjacency bits with the earliest placed vertex most significant, so
// integer order equals lexicographic order of the column.
std::uint64_t column_code(const Graph& g, int v, const int* placed, int k) {
  std::uint64_t code = 0;
  for (int i = 0; i < k; ++i)
    code = (code << 1) | (g.has_edge(v, placed[i]) ? 1 : 0);
  return code;
}

// Depth-first search over vertex orderings whose partial bit-string equals
// the candidate's; any branch producing a smaller column kills canonicity,
// larger columns are pruned immediately.
bool smaller_labeling_exists(const Graph& g, const std::vector<std::uint64_t>& cols,
                             int* placed, VertexSet used, int k) {
  if (k == g.n) return false;
  for (int v = 0; v < g.n; ++v) {
    if (used & vbit(v)) continue;
    std::uint64_t code = column_code(g, v, placed, k);
    if (code < cols[k]) return true;
    if (code > cols[k]) continue;
    placed[k] = v;
    if (smaller_labeling_exists(g, cols, placed, used | vbit(v), k + 1)) return true;
  }
  return false;
}

}  // namespace

bool is_canonical_labeling(const Graph& g) {
  if (g.n <= 1) return true;
  std::vector<std::uint64_t> cols(g.n);
  for (int k = 0; k < g.n; ++k) {
    std::uint64_t code = 0;
    for (int i = 0; i < k; ++i) code = (code << 1) | (g.has_edge(k, i) ? 1 : 0);
    cols[k] = code;
  }
  std::vector<int> placed(g.n);
  return !smaller_labeling_exists(g, cols, placed.data(), 0, 0);
}

void generate_nonisomorphic(int n, const std::function<void(const Graph&)>& sink) {
  if (n < 0 || n > kMaxEnumerationVertices)
    throw std::invalid_argument("generation supports 0.." +
                                std::to_string(kMaxEnumerationVertices) +
                                " vertices, got " + std::to_string(n));
  if (n == 0) {
    sink(empty_graph(0));
    return;
  }
  std::vector<Graph> level{empty_graph(1)};
  if (n == 1) {
    sink(level[0]);
    return;
  }
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    const bool last = (k == n);
    for (const Graph& parent : level) {
      for (VertexSet s = 0; s < (VertexSet{1} << (k - 1)); ++s) {
        Graph child = empty_graph(k);
        for (int v = 0; v < k - 1; ++v) child.adj[v] = parent.adj[v];
        child.adj[k - 1] = s;
        VertexSet rest = s;
        while (rest) {
          int v = std::countr_zero(rest);
          rest &= rest - 1;
          child.adj[v] |= vbit(k - 1);
        }
        if (!is_canonical_labeling(child)) continue;
        if (last)
          sink(child);
        else
          next.push_back(std::move(child));
      }
    }
    if (!last) level = std::move(next);
  }
}

std::vector<Graph> generate_nonisomorphic(int n) {
  std::vector<Graph> out;
  generate_nonisomorphic(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

RealizabilityTable scan_corpus(const std::vector<Graph>& graphs, const Field& f,
                               int workers, int cap, const ProgressFn& progress) {
  RealizabilityTable table;
  table.field = f;
  table.total_graphs = static_cast<long long>(graphs.size());
  table.n = graphs.empty() ? 0 : graphs[0].n;
  workers = std::max(1, workers);

  struct Local {
    std::map<std::pair<int, int>, RealizabilityEntry> counts;
  };
  std::vector<Local> locals(workers);
  std::atomic<size_t> cursor{0};
  std::atomic<long long> done{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&](int slot) {
    try {
      constexpr size_t kChunk = 16;
      auto& local = locals[slot].counts;
      for (;;) {
        size_t begin = cursor.fetch_add(kChunk);
        if (begin >= graphs.size()) break;
        size_t end = std::min(graphs.size(), begin + kChunk);
        for (size_t idx = begin; idx < end; ++idx) {
          const Graph& g = graphs[idx];
          int dh = deg_h(g);
          int rg = regularity(g, f, cap);
          check_bounds_values(g, rg, dh, /*hard=*/true);
          auto& entry = local[{rg, dh}];
          entry.count += 1;
          if (entry.witness_index < 0 ||
              entry.witness_index > static_cast<long long>(idx))
            entry.witness_index = static_cast<long long>(idx);
        }
        long long total_done = done.fetch_add(static_cast<long long>(end - begin)) +
                               static_cast<long long>(end - begin);
        if (progress && (total_done / 10000 != (total_done - static_cast<long long>(end - begin)) / 10000))
          progress(total_done, table.total_graphs);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) threads.emplace_back(work, t);
    for (auto& th : threads) th.join();
  }
  if (error) std::rethrow_exception(error);

  for (auto& local : locals) {
    for (auto& [key, entry] : local.counts) {
      auto& merged = table.counts[key];
      merged.count += entry.count;
      if (merged.witness_index < 0 || (entry.witness_index >= 0 &&
                                       entry.witness_index < merged.witness_index))
        merged.witness_index = entry.witness_index;
    }
  }
  for (auto& [key, entry] : table.counts) {
    (void)key;
    entry.witness = graph6_encode(graphs[static_cast<size_t>(entry.witness_index)]);
  }
  return table;
}

RealizabilityTable scan(int n, const Field& f, int workers, bool connected_only,
                        const ProgressFn& progress) {
  std::vector<Graph> graphs;
  generate_nonisomorphic(n, [&](const Graph& g) {
    if (connected_only && connected_components(g).size() > 1) return;
    graphs.push_back(g);
  });
  RealizabilityTable table = scan_corpus(graphs, f, workers, std::max(n, kDefaultDeskCap), progress);
  table.n = n;
  return table;
}

std::string to_tsv(const RealizabilityTable& t) {
  std::ostringstream out;
  out << "r\td\tcount\twitness_graph6\n";
  for (const auto& [key, entry] : t.counts)
    out << key.first << "\t" << key.second << "\t" << entry.count << "\t"
        << entry.witness << "\n";
  return out.str();
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    try {
      graphs.push_back(graph6_decode(line));
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return graphs;
}

bool CorpusReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CorpusCheckResult& c) { return c.failed == 0; });
}

CorpusReport verify_corpus(std::istream& in, const Field& f,
                           const std::vector<std::string>& checks, int cap) {
  static const std::vector<std::string> kAll = {"reg-bound", "sum-bound",
                                                "hochster-hilbert", "additivity"};
  std::vector<std::string> selected = checks.empty() ? kAll : checks;
  for (const auto& name : selected)
    if (std::find(kAll.begin(), kAll.end(), name) == kAll.end())
      throw std::invalid_argument("unknown check '" + name + "'");

  std::vector<Graph> graphs = read_graph6_lines(in);
  CorpusReport report;
  for (const auto& name : selected) report.checks.push_back({name, 0, 0, {}});

  auto result = [&](const std::string& name) -> CorpusCheckResult& {
    for (auto& c : report.checks)
      if (c.name == name) return c;
    throw std::logic_error("check lookup");
  };
  auto record = [&](const std::string& name, bool ok, const Graph& g,
                    const std::string& detail) {
    auto& c = result(name);
    if (ok) {
      c.passed += 1;
    } else {
      c.failed += 1;
      c.failures.push_back(graph6_encode(g) + ": " + detail);
    }
  };
  auto selected_has = [&](const std::string& name) {
    return std::find(selected.begin(), selected.end(), name) != selected.end();
  };

  for (const Graph& g : graphs) {
    InvariantReport rep = invariant_report(g, f, cap, /*hard_bounds=*/false);
    report.reports.push_back(rep);
    if (selected_has("reg-bound"))
      record("reg-bound", rep.reg <= rep.alpha_prime, g,
             "reg " + std::to_string(rep.reg) + " > matching " +
                 std::to_string(rep.alpha_prime));
    if (selected_has("sum-bound"))
      record("sum-bound", rep.reg + rep.deg_h <= rep.n, g,
             "reg + deg h = " + std::to_string(rep.reg + rep.deg_h) + " > n = " +
                 std::to_string(rep.n));
    if (selected_has("hochster-hilbert")) {
      auto bt = betti_table(g, f, cap);
      bool ok = hilbert_from_betti(bt, g.n) == hilbert_series(g);
      record("hochster-hilbert", ok, g, "resolution and f-vector series disagree");
    }
    if (selected_has("additivity")) {
      auto comps = connected_components(g);
      bool ok = true;
      std::string detail;
      if (comps.size() > 1) {
        int reg_sum = 0, degh_sum = 0;
        RationalSeries product{IntPoly::constant(1), 0};
        for (VertexSet comp : comps) {
          Graph piece = induced_subgraph(g, comp);
          reg_sum += regularity(piece, f, cap);
          degh_sum += deg_h(piece);
          product = series_mul(product, hilbert_series(piece));
        }
        if (reg_sum != rep.reg) {
          ok = false;
          detail = "component regularities sum to " + std::to_string(reg_sum) +
                   ", whole graph has " + std::to_string(rep.reg);
        } else if (degh_sum != rep.deg_h) {
          ok = false;
          detail = "component deg h sum to " + std::to_string(degh_sum) +
                   ", whole graph has " + std::to_string(rep.deg_h);
        } else if (!(product == hilbert_series(g))) {
          ok = false;
          detail = "component series product differs from the whole-graph series";
        }
      }
      record("additivity", ok, g, detail);
    }
  }
  return report;
}

}  // namespace edgeideal
