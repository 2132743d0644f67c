#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/invariants.hpp"

namespace edgeideal {

inline constexpr int kMaxEnumerationVertices = 10;

// True iff the labeling of g is the canonical one: no vertex permutation
// yields a lexicographically smaller column-major adjacency bit-string.
bool is_canonical_labeling(const Graph& g);

// Exactly one representative per isomorphism class, canonically labeled.
// Orderly generation: every canonical (k-1)-vertex graph is extended by a
// last vertex over all neighbor subsets and a child survives iff its labeling
// is canonical. The prefix of a canonical labeling is canonical, so each
// class is produced exactly once.
void generate_nonisomorphic(int n, const std::function<void(const Graph&)>& sink);
std::vector<Graph> generate_nonisomorphic(int n);

struct RealizabilityEntry {
  long long count = 0;
  long long witness_index = -1;  // first graph (in stream order) hitting the key
  std::string witness;           // its graph6 string
};

// Histogram of (reg, deg h) over a graph stream; every graph also passes the
// proven-bound checks or the scan aborts naming the offender.
struct RealizabilityTable {
  int n = 0;
  Field field;
  long long total_graphs = 0;
  std::map<std::pair<int, int>, RealizabilityEntry> counts;
};

using ProgressFn = std::function<void(long long done, long long total)>;

RealizabilityTable scan(int n, const Field& f, int workers,
                        bool connected_only = false, const ProgressFn& progress = {});
RealizabilityTable scan_corpus(const std::vector<Graph>& graphs, const Field& f,
                               int workers, int cap = kDefaultDeskCap,
                               const ProgressFn& progress = {});

// r <TAB> d <TAB> count <TAB> witness_graph6, sorted by (r, d).
std::string to_tsv(const RealizabilityTable& t);

// One graph6 string per line; blank lines and an optional ">>graph6<<"
// header are ignored. Parse failures carry the line number.
std::vector<Graph> read_graph6_lines(std::istream& in);

struct CorpusCheckResult {
  std::string name;
  long long passed = 0;
  long long failed = 0;
  std::vector<std::string> failures;  // diagnostics for the failing graphs
};

struct CorpusReport {
  std::vector<InvariantReport> reports;
  std::vector<CorpusCheckResult> checks;
  bool all_ok() const;
};

// Batch driver: per-graph invariant reports plus aggregate pass/fail for the
// selected checks. Known checks: reg-bound, sum-bound, hochster-hilbert,
// additivity (reg/deg h add over connected components, series multiply).
// An empty selection runs all of them.
CorpusReport verify_corpus(std::istream& in, const Field& f,
                           const std::vector<std::string>& checks,
                           int cap = kDefaultDeskCap);

}  // namespace edgeideal
