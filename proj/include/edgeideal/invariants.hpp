#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/homology.hpp"
#include "edgeideal/poly.hpp"

namespace edgeideal {

// Betti/regularity computations walk all 2^n vertex subsets; the desk cap
// keeps that honest. Raise it explicitly when you mean it.
inline constexpr int kDefaultDeskCap = 12;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// f_{-1}, f_0, ..., f_{alpha-1}: the number of independent sets of each
// cardinality (f_{-1} = 1 counts the empty set). Last index is alpha(g).
std::vector<long long> f_vector(const Graph& g);

int alpha(const Graph& g);            // independence number
int cover_number(const Graph& g);     // n - alpha
int matching_number(const Graph& g);  // maximum matching (blossom search)

// Hilbert series of the quotient by the edge ideal, in canonical form:
// numerator = h-polynomial, denominator exponent = alpha(g) = Krull dim.
RationalSeries hilbert_series(const Graph& g);
IntPoly h_polynomial(const Graph& g);
int deg_h(const Graph& g);

// Graded Betti numbers of the quotient ring: entries (i, j) -> multiplicity.
// Indexing is fixed to the resolution of the quotient, so (0,0) -> 1 always
// and row i = 1 starts the ideal generators ((1,2) = edge count).
struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;
  long long entry(int i, int j) const;
};

BettiTable betti_table(const Graph& g, const Field& f, int cap = kDefaultDeskCap,
                       int workers = 1);

// max{j - i} over nonzero entries with i >= 1 (0 for edgeless graphs).
// Computed by the subset-homology scan directly; the full table is never
// materialized, and layers above the top possible degree are skipped.
int regularity(const Graph& g, const Field& f, int cap = kDefaultDeskCap,
               int workers = 1);

int proj_dim(const Graph& g, const Field& f, int cap = kDefaultDeskCap);
int depth(const Graph& g, const Field& f, int cap = kDefaultDeskCap);

int regularity_from_table(const BettiTable& bt);
int proj_dim_from_table(const BettiTable& bt);

// Alternating-sum numerator over (1-t)^n, normalized.
RationalSeries hilbert_from_betti(const BettiTable& bt, int n);

struct BoundCheck {
  std::string name;
  long long lhs = 0, rhs = 0;  // checks lhs <= rhs
  bool ok = false;
};

struct BoundsReport {
  std::vector<BoundCheck> checks;
  bool all_ok() const;
  std::string describe_failures() const;
};

// Evaluates every proven inequality: reg + deg h <= n, reg <= matching,
// matching <= cover, deg h <= n - cover, reg <= floor(n/2). These are
// theorems, so in hard mode any failure throws std::logic_error naming the
// graph6 string and both sides (a failure means a bug, not bad input).
BoundsReport check_bounds(const Graph& g, const Field& f, int cap = kDefaultDeskCap,
                          bool hard = true);

// Same bound set evaluated from already-computed reg / deg h values (the
// enumeration scan has both in hand and must not recompute them).
BoundsReport check_bounds_values(const Graph& g, int reg_value, int deg_h_value,
                                 bool hard = true);

struct InvariantReport {
  int n = 0;
  int edges = 0;
  int alpha = 0;
  int alpha_prime = 0;
  int cover = 0;
  int dim = 0;
  IntPoly h_poly;
  int deg_h = 0;
  int reg = 0;
  int proj_dim = 0;
  int depth = 0;
  Field field;
  BoundsReport bounds;
};

InvariantReport invariant_report(const Graph& g, const Field& f,
                                 int cap = kDefaultDeskCap, bool hard_bounds = false);

// A resolution is pure when every homological index i >= 1 carries at most
// one internal degree. For pure resolutions deg h - reg = dim - depth must
// hold; a pure table violating it is a hard error. Returns nullopt when the
// resolution is not pure (check skipped).
struct PurityReport {
  long long lhs = 0;  // deg h - reg
  long long rhs = 0;  // dim - depth
};
std::optional<PurityReport> pure_resolution_check(const BettiTable& bt,
                                                  const InvariantReport& report);

}  // namespace edgeideal
