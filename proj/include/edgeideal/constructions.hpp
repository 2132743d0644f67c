#pragma once

#include <optional>
#include <string>

#include "edgeideal/graph.hpp"
#include "edgeideal/invariants.hpp"
#include "edgeideal/poly.hpp"

namespace edgeideal {

// Expected invariants attached to a constructed family; at least one of the
// expectation fields is always present.
struct Prediction {
  std::optional<RationalSeries> series;
  std::optional<int> reg;
  std::optional<int> deg_h;
  std::string source;
};

// K_{a,b}: parts {0..a-1} and {a..a+b-1}, all cross edges.
Graph complete_bipartite(int a, int b);
// Prediction for the square case a = b = d: H = (2-(1-t)^d)/(1-t)^d,
// reg 1, deg h = d.
Prediction kdd_prediction(int d);

// K_{1,n-1}: center 0. Prediction (deg h, reg) = (n-1, 1).
Graph star_graph(int n);
Prediction star_prediction(int n);

// m disjoint edges {2k, 2k+1}. Prediction h = (1+t)^m, reg = deg h = m.
Graph matching_graph(int m);
Prediction matching_prediction(int m);

// Five vertices: center 0 adjacent to 1..4, plus edges {1,2} and {3,4}.
// Built as the cone over all four vertices of two disjoint edges.
// Prediction H = (1+3t)/(1-t)^2, reg 2, deg h 1.
Graph ribbon();
Prediction ribbon_prediction();

// The family with reg = r and deg h = 1 for r >= 3: the five ribbon vertices
// X, then r-2 disjoint edges (y_{k,1}, y_{k,2}) consecutively, then a clique
// Z of size 2^r - r - 2 whose members are adjacent to all of X and to every
// y_{k,1}. Vertex numbering is fixed (X = 0..4 with center 0, then Y pairs,
// then the Z block) so fixtures stay byte-stable.
Graph g_family(int r);
Prediction g_family_prediction(int r);

// A graph with reg = r and deg h = d, r, d >= 1:
//   r <= d     : K_{d-r+1,d-r+1} with r-1 extra disjoint edges
//   r == d + 1 : ribbon with r-2 extra disjoint edges
//   r >  d + 1 : g_family(r-d+1) with d-1 extra disjoint edges
Graph realize(int r, int d);
Prediction realize_prediction(int r, int d);

// The cone-update hypotheses: dim >= 2 with h = 1 + h1 t + h2 t^2, reg >= 2,
// |S| = n - dim + 2, S dominating its complement, and V \ S independent.
// The last condition makes the colon ideal of the new vertex exactly the
// variables of S; without it the predicted series fails (e.g. graph6 FAOvg
// with S = {0..4} satisfies the other four and still disagrees).
struct LemmaAHypotheses {
  bool dim_and_h = false;
  bool reg_at_least_2 = false;
  bool cardinality = false;
  bool domination = false;
  bool complement_independent = false;
  bool all() const {
    return dim_and_h && reg_at_least_2 && cardinality && domination &&
           complement_independent;
  }
};
LemmaAHypotheses lemma_a_applicable(const Graph& g, VertexSet s, const Field& f,
                                    int cap = kDefaultDeskCap, int workers = 1);

// Predicted Hilbert series of the cone: (1 + (h1+1)t + (h2-1)t^2)/(1-t)^dim,
// normalized; regularity is predicted unchanged. h must be 1 + h1 t + h2 t^2.
// h2 = 0 is accepted but flagged: the update then produces a negative t^2
// coefficient, a regime the family constructions never enter.
struct LemmaAPrediction {
  RationalSeries series;
  bool within_demonstrated_regime = true;
};
LemmaAPrediction lemma_a_predict(const IntPoly& h, int dim);

}  // namespace edgeideal
