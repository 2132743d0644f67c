#include "edgeideal/constructions.hpp"

#include <stdexcept>

namespace edgeideal {

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite needs a, b >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return from_edge_list(a + b, edges);
}

Prediction kdd_prediction(int d) {
  const IntPoly one_minus_t{{1, -1}};
  IntPoly num = sub(IntPoly::constant(2), power(one_minus_t, d));
  Prediction p;
  p.series = normalize({num, d});
  p.reg = 1;
  p.deg_h = d;
  p.source = "complete bipartite K_{d,d} closed form";
  return p;
}

Graph star_graph(int n) {
  if (n < 2) throw std::invalid_argument("star_graph needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return from_edge_list(n, edges);
}

Prediction star_prediction(int n) {
  Prediction p;
  p.reg = 1;
  p.deg_h = n - 1;
  p.source = "star K_{1,n-1}";
  return p;
}

Graph matching_graph(int m) {
  if (m < 0) throw std::invalid_argument("matching_graph needs m >= 0");
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < m; ++k) edges.emplace_back(2 * k, 2 * k + 1);
  return from_edge_list(2 * m, edges);
}

Prediction matching_prediction(int m) {
  const IntPoly one_plus_t{{1, 1}};
  Prediction p;
  p.series = RationalSeries{power(one_plus_t, m), m};
  p.reg = m;
  p.deg_h = m;
  p.source = "disjoint union of m edges";
  return p;
}

Graph ribbon() {
  // Isomorphic to cone_over_subset(matching_graph(2), all four vertices),
  // relabeled so the center is vertex 0 (the convention g_family extends).
  return from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});
}

Prediction ribbon_prediction() {
  Prediction p;
  p.series = RationalSeries{IntPoly{{1, 3}}, 2};
  p.reg = 2;
  p.deg_h = 1;
  p.source = "ribbon (cone over two disjoint edges)";
  return p;
}

Graph g_family(int r) {
  if (r < 3) throw std::invalid_argument("g_family needs r >= 3");
  int y_pairs = r - 2;
  long long z_count = (1LL << r) - r - 2;  // sum over i of 2^(i+1) - 1
  long long n = 5 + 2LL * y_pairs + z_count;
  if (n > kMaxVertices)
    throw std::invalid_argument("g_family(" + std::to_string(r) + ") needs " +
                                std::to_string(n) + " vertices, over the cap");
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}};
  int z_base = 5 + 2 * y_pairs;
  for (int k = 0; k < y_pairs; ++k) edges.emplace_back(5 + 2 * k, 6 + 2 * k);
  // The clique block comes in generations: the 2^(i+1) - 1 vertices of
  // generation i see all of X, the whole clique, and the first endpoints of
  // the first i edges only. (Generation counts match the iterated-cone
  // construction; a flat neighborhood rule would change the f-vector.)
  int z = z_base;
  for (int gen = 1; gen <= y_pairs; ++gen) {
    for (int j = 0; j < (1 << (gen + 1)) - 1; ++j, ++z) {
      for (int x = 0; x < 5; ++x) edges.emplace_back(x, z);
      for (int k = 0; k < gen; ++k) edges.emplace_back(5 + 2 * k, z);
      for (int zj = z_base; zj < z; ++zj) edges.emplace_back(zj, z);
    }
  }
  return from_edge_list(static_cast<int>(n), edges);
}

Prediction g_family_prediction(int r) {
  Prediction p;
  p.series = RationalSeries{IntPoly{{1, (1LL << r) - 1}}, r};
  p.reg = r;
  p.deg_h = 1;
  p.source = "clique-over-ribbon family G^(r)";
  return p;
}

Graph realize(int r, int d) {
  if (r < 1 || d < 1) throw std::invalid_argument("realize needs r, d >= 1");
  if (r <= d) return disjoint_union(complete_bipartite(d - r + 1, d - r + 1), matching_graph(r - 1));
  if (r == d + 1) return disjoint_union(ribbon(), matching_graph(r - 2));
  return disjoint_union(g_family(r - d + 1), matching_graph(d - 1));
}

Prediction realize_prediction(int r, int d) {
  Prediction p;
  if (r <= d) {
    p.series = series_mul(*kdd_prediction(d - r + 1).series,
                          *matching_prediction(r - 1).series);
  } else if (r == d + 1) {
    p.series = series_mul(*ribbon_prediction().series,
                          *matching_prediction(r - 2).series);
  } else {
    p.series = series_mul(*g_family_prediction(r - d + 1).series,
                          *matching_prediction(d - 1).series);
  }
  p.reg = r;
  p.deg_h = d;
  p.source = "realize(r,d) recipe";
  return p;
}

LemmaAHypotheses lemma_a_applicable(const Graph& g, VertexSet s, const Field& f,
                                    int cap, int workers) {
  if ((s & ~g.vertices()) != 0)
    throw std::invalid_argument("subset contains out-of-range vertices");
  LemmaAHypotheses h;
  auto series = hilbert_series(g);
  int dim = series.denom_exp;
  const IntPoly& hp = series.num;
  h.dim_and_h = dim >= 2 && hp.degree() <= 2 && hp.coeff(0) == 1;
  h.reg_at_least_2 = regularity(g, f, cap, workers) >= 2;
  h.cardinality = setsize(s) == g.n - dim + 2;
  h.domination = true;
  h.complement_independent = true;
  VertexSet complement = g.vertices() & ~s;
  VertexSet outside = complement;
  while (outside) {
    int u = std::countr_zero(outside);
    outside &= outside - 1;
    if ((g.adj[u] & s) == 0) h.domination = false;
    if ((g.adj[u] & complement) != 0) h.complement_independent = false;
  }
  return h;
}

LemmaAPrediction lemma_a_predict(const IntPoly& h, int dim) {
  if (h.coeff(0) != 1)
    throw std::invalid_argument("lemma_a_predict needs h with constant term 1");
  if (h.degree() > 2)
    throw std::invalid_argument("lemma_a_predict needs deg h <= 2");
  if (dim < 0) throw std::invalid_argument("negative dimension");
  std::int64_t h1 = h.coeff(1), h2 = h.coeff(2);
  LemmaAPrediction out;
  out.series = normalize({IntPoly{{1, h1 + 1, h2 - 1}}, dim});
  out.within_demonstrated_regime = h2 >= 1;
  return out;
}

}  // namespace edgeideal
