#include "edgeideal/invariants.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace edgeideal {

std::vector<long long> f_vector(const Graph& g) {
  std::vector<long long> f{1};
  auto rec = [&](auto&& self, int size, VertexSet cand) -> void {
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      size_t s = static_cast<size_t>(size) + 1;
      if (f.size() <= s) f.resize(s + 1, 0);
      f[s] = checked_add(f[s], 1);
      self(self, static_cast<int>(s), cand & ~g.adj[v]);
    }
  };
  rec(rec, 0, g.vertices());
  return f;
}

int alpha(const Graph& g) { return static_cast<int>(f_vector(g).size()) - 1; }

int cover_number(const Graph& g) { return g.n - alpha(g); }

namespace {

// Maximum matching by alternating-forest augmenting-path search with blossom
// contraction (base[] tracking); odd cycles make the contraction necessary
// for correctness even on small graphs.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(g.n),
        match_(g.n, -1),
        parent_(g.n, -1),
        base_(g.n, 0),
        used_(g.n, false),
        blossom_(g.n, false) {}

  int run() {
    int size = 0;
    for (int v = 0; v < n_; ++v)
      if (match_[v] < 0 && augment_from(v)) ++size;
    return size;
  }

 private:
  const Graph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, blossom_;

  int lowest_common_base(int a, int b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] < 0) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = true;
      blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_exposed(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::vector<int> queue{root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      VertexSet nbrs = g_.adj[v];
      while (nbrs) {
        int to = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          // Odd cycle: contract the blossom down to the common base.
          int cur = lowest_common_base(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;  // augmenting path reached an exposed vertex
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  bool augment_from(int root) {
    int u = find_exposed(root);
    if (u < 0) return false;
    while (u >= 0) {
      int pv = parent_[u], next = match_[pv];
      match_[u] = pv;
      match_[pv] = u;
      u = next;
    }
    return true;
  }
};

}  // namespace

int matching_number(const Graph& g) {
  BlossomMatcher m(g);
  return m.run();
}

RationalSeries hilbert_series(const Graph& g) {
  auto f = f_vector(g);
  int a = static_cast<int>(f.size()) - 1;
  const IntPoly one_minus_t{{1, -1}};
  IntPoly num;
  for (int j = 0; j <= a; ++j)
    num = add(num, mul(IntPoly::monomial(f[j], j), power(one_minus_t, a - j)));
  // The only surviving term at t = 1 is f_alpha, which is positive, so the
  // fraction is already in lowest terms with denominator exponent alpha.
  if (eval_at_one(num) != f[a])
    throw std::logic_error("hilbert series numerator lost its t=1 value");
  RationalSeries s{num, a};
  if (!is_canonical(s)) throw std::logic_error("hilbert series not canonical");
  return s;
}

IntPoly h_polynomial(const Graph& g) { return hilbert_series(g).num; }

int deg_h(const Graph& g) { return std::max(0, h_polynomial(g).degree()); }

long long BettiTable::entry(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

namespace {

void require_cap(const Graph& g, int cap, const char* what) {
  if (g.n > cap) {
    std::ostringstream msg;
    msg << what << " walks all 2^n vertex subsets; n=" << g.n
        << " exceeds the desk cap " << cap
        << " (pass a larger cap / --cap explicitly to proceed)";
    throw CapExceeded(msg.str());
  }
}

// An isolated vertex of the induced subgraph is a cone vertex of its
// independence complex, so the complex is contractible and contributes
// nothing. This removes the bulk of the 2^n subsets.
bool induced_has_isolated_vertex(const Graph& g, VertexSet w) {
  VertexSet rest = w;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if ((g.adj[v] & w) == 0) return true;
  }
  return false;
}

// Partition [1, 2^n) across workers, run fn(lo, hi, slot), propagate the
// first exception.
void run_subset_ranges(std::uint64_t total, int workers,
                       const std::function<void(std::uint64_t, std::uint64_t, int)>& fn) {
  workers = std::max(1, workers);
  if (workers == 1 || total < 1024) {
    fn(1, total, 0);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mutex;
  std::uint64_t chunk = (total - 1 + workers) / workers;
  for (int t = 0; t < workers; ++t) {
    std::uint64_t lo = 1 + chunk * static_cast<std::uint64_t>(t);
    std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, lo, hi, t] {
      try {
        fn(lo, hi, t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

BettiTable betti_table(const Graph& g, const Field& f, int cap, int workers) {
  require_cap(g, cap, "betti_table");
  std::uint64_t total = std::uint64_t{1} << g.n;
  workers = std::max(1, workers);
  std::vector<std::map<std::pair<int, int>, long long>> partial(workers);
  run_subset_ranges(total, workers, [&](std::uint64_t lo, std::uint64_t hi, int slot) {
    auto& local = partial[slot];
    for (std::uint64_t w = lo; w < hi; ++w) {
      if (induced_has_isolated_vertex(g, w)) continue;
      FaceList faces = independence_faces_within(g, w);
      auto dims = reduced_homology_dims(faces, f);
      int j = setsize(w);
      for (int k = -1; k + 1 < static_cast<int>(dims.size()); ++k) {
        long long d = dims[k + 1];
        if (d <= 0) continue;
        int i = j - 1 - k;
        if (i == 0)
          throw std::logic_error("unexpected top homology on a nonempty subset");
        local[{i, j}] += d;
      }
    }
  });
  BettiTable bt;
  bt.entries[{0, 0}] = 1;  // empty subset: reduced homology of {{}} in degree -1
  for (auto& local : partial)
    for (auto& [key, value] : local) bt.entries[key] += value;
  return bt;
}

int regularity(const Graph& g, const Field& f, int cap, int workers) {
  require_cap(g, cap, "regularity");
  std::uint64_t total = std::uint64_t{1} << g.n;
  workers = std::max(1, workers);
  std::vector<int> best(workers, 0);
  run_subset_ranges(total, workers, [&](std::uint64_t lo, std::uint64_t hi, int slot) {
    int local = 0;
    for (std::uint64_t w = lo; w < hi; ++w) {
      if (induced_has_isolated_vertex(g, w)) continue;
      FaceList faces = independence_faces_within(g, w);
      int k = top_nonzero_homology_degree(faces, f);
      if (k != kNoHomology) local = std::max(local, k + 1);
    }
    best[slot] = local;
  });
  return *std::max_element(best.begin(), best.end());
}

int regularity_from_table(const BettiTable& bt) {
  int reg = 0;
  for (const auto& [key, value] : bt.entries) {
    (void)value;
    if (key.first >= 1) reg = std::max(reg, key.second - key.first);
  }
  return reg;
}

int proj_dim_from_table(const BettiTable& bt) {
  int pd = 0;
  for (const auto& [key, value] : bt.entries) {
    (void)value;
    pd = std::max(pd, key.first);
  }
  return pd;
}

int proj_dim(const Graph& g, const Field& f, int cap) {
  return proj_dim_from_table(betti_table(g, f, cap));
}

int depth(const Graph& g, const Field& f, int cap) {
  return g.n - proj_dim(g, f, cap);
}

RationalSeries hilbert_from_betti(const BettiTable& bt, int n) {
  std::vector<std::int64_t> coeffs;
  for (const auto& [key, mult] : bt.entries) {
    auto [i, j] = key;
    if (static_cast<int>(coeffs.size()) <= j) coeffs.resize(j + 1, 0);
    std::int64_t term = (i % 2 == 0) ? mult : -mult;
    coeffs[j] = checked_add(coeffs[j], term);
  }
  return normalize({IntPoly{std::move(coeffs)}, n});
}

bool BoundsReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.ok; });
}

std::string BoundsReport::describe_failures() const {
  std::ostringstream out;
  for (const auto& c : checks)
    if (!c.ok) out << c.name << " (" << c.lhs << " > " << c.rhs << ") ";
  return out.str();
}

namespace {

BoundsReport bounds_from_values(const Graph& g, int reg_value, int deg_h_value) {
  int n = g.n;
  int am = matching_number(g);
  int cov = cover_number(g);
  BoundsReport report;
  auto push = [&](const std::string& name, long long lhs, long long rhs) {
    report.checks.push_back({name, lhs, rhs, lhs <= rhs});
  };
  push("reg-plus-degh-le-n", reg_value + deg_h_value, n);
  push("reg-le-matching", reg_value, am);
  push("matching-le-cover", am, cov);
  push("degh-le-n-minus-cover", deg_h_value, n - cov);
  push("reg-le-half-n", reg_value, n / 2);
  return report;
}

void enforce_bounds(const Graph& g, const BoundsReport& report) {
  if (!report.all_ok())
    throw std::logic_error("proven bound violated on graph6 '" + graph6_encode(g) +
                           "': " + report.describe_failures());
}

}  // namespace

BoundsReport check_bounds(const Graph& g, const Field& f, int cap, bool hard) {
  BoundsReport report =
      bounds_from_values(g, regularity(g, f, cap), deg_h(g));
  if (hard) enforce_bounds(g, report);
  return report;
}

BoundsReport check_bounds_values(const Graph& g, int reg_value, int deg_h_value,
                                 bool hard) {
  BoundsReport report = bounds_from_values(g, reg_value, deg_h_value);
  if (hard) enforce_bounds(g, report);
  return report;
}

InvariantReport invariant_report(const Graph& g, const Field& f, int cap,
                                 bool hard_bounds) {
  InvariantReport rep;
  rep.n = g.n;
  rep.edges = g.edge_count();
  rep.field = f;
  auto series = hilbert_series(g);
  rep.h_poly = series.num;
  rep.deg_h = std::max(0, rep.h_poly.degree());
  rep.alpha = series.denom_exp;
  rep.dim = rep.alpha;
  rep.cover = g.n - rep.alpha;
  rep.alpha_prime = matching_number(g);
  BettiTable bt = betti_table(g, f, cap);
  rep.reg = regularity_from_table(bt);
  rep.proj_dim = proj_dim_from_table(bt);
  rep.depth = g.n - rep.proj_dim;
  rep.bounds = bounds_from_values(g, rep.reg, rep.deg_h);
  if (hard_bounds) enforce_bounds(g, rep.bounds);
  return rep;
}

std::optional<PurityReport> pure_resolution_check(const BettiTable& bt,
                                                  const InvariantReport& report) {
  std::map<int, int> degrees_per_index;
  for (const auto& [key, value] : bt.entries) {
    (void)value;
    if (key.first >= 1) degrees_per_index[key.first] += 1;
  }
  for (const auto& [i, count] : degrees_per_index) {
    (void)i;
    if (count > 1) return std::nullopt;  // not pure, check skipped
  }
  PurityReport pr;
  pr.lhs = report.deg_h - report.reg;
  pr.rhs = report.dim - report.depth;
  if (pr.lhs != pr.rhs) {
    std::ostringstream msg;
    msg << "pure resolution identity violated: deg h - reg = " << pr.lhs
        << " but dim - depth = " << pr.rhs;
    throw std::logic_error(msg.str());
  }
  return pr;
}

}  // namespace edgeideal
