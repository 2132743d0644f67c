#include <doctest.h>

#include <stdexcept>

#include <random>

#include "edgeideal/constructions.hpp"
#include "edgeideal/invariants.hpp"
#include "oracles.hpp"

using namespace edgeideal;

namespace {

const Field kGF2 = Field::gf2();

void check_prediction(const Graph& g, const Prediction& p, int cap = kDefaultDeskCap) {
  if (p.series) CHECK(hilbert_series(g) == *p.series);
  if (p.deg_h) CHECK(deg_h(g) == *p.deg_h);
  if (p.reg) CHECK(regularity(g, kGF2, cap) == *p.reg);
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("complete bipartite shapes") {
  CHECK(complete_bipartite(1, 1) == from_edge_list(2, {{0, 1}}));

  Graph c4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(oracle::isomorphic(complete_bipartite(2, 2), c4));

  Graph k23 = complete_bipartite(2, 3);
  CHECK(k23.n == 5);
  CHECK(k23.edge_count() == 6);
  CHECK_THROWS_AS(complete_bipartite(0, 2), std::invalid_argument);
}

TEST_CASE("square bipartite predictions hold") {
  for (int d = 1; d <= 4; ++d)
    check_prediction(complete_bipartite(d, d), kdd_prediction(d));
  // Spot check the closed form: d = 3 numerator is 2 - (1-t)^3.
  CHECK(kdd_prediction(3).series->num == IntPoly{{1, 3, -3, 1}});
}

TEST_CASE("star and matching predictions hold") {
  for (int n : {2, 5, 9}) check_prediction(star_graph(n), star_prediction(n));
  for (int m : {1, 2, 3, 4}) check_prediction(matching_graph(m), matching_prediction(m));
  CHECK(matching_graph(1) == star_graph(2));
  CHECK(matching_graph(0) == empty_graph(0));
}

TEST_CASE("ribbon structure and prediction") {
  Graph rib = ribbon();
  CHECK(rib.n == 5);
  CHECK(rib.edge_count() == 6);
  CHECK(rib.degree(0) == 4);
  CHECK(alpha(rib) == 2);
  check_prediction(rib, ribbon_prediction());

  // Same graph as coning two disjoint edges over all four vertices.
  Graph coned = cone_over_subset(matching_graph(2), matching_graph(2).vertices());
  CHECK(oracle::isomorphic(rib, coned));
  CHECK(hilbert_series(coned) == *ribbon_prediction().series);
}

TEST_CASE("g_family(3) is the ten-vertex graph with h = 1 + 7t") {
  Graph g3 = g_family(3);
  CHECK(g3.n == 10);
  Graph expected = from_edge_list(
      10, {// ribbon on 0..4, center 0
           {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4},
           // one disjoint edge
           {5, 6},
           // clique block 7,8,9 joined to 0..4 and to 5 (not 6)
           {7, 0}, {7, 1}, {7, 2}, {7, 3}, {7, 4}, {7, 5},
           {8, 0}, {8, 1}, {8, 2}, {8, 3}, {8, 4}, {8, 5},
           {9, 0}, {9, 1}, {9, 2}, {9, 3}, {9, 4}, {9, 5},
           {7, 8}, {7, 9}, {8, 9}});
  CHECK(g3 == expected);
  CHECK(h_polynomial(g3) == IntPoly{{1, 7}});
  CHECK(regularity(g3, kGF2) == 3);
}

TEST_CASE("g_family sizes and the cheap half of its prediction") {
  CHECK_THROWS_AS(g_family(2), std::invalid_argument);
  Graph g4 = g_family(4);
  CHECK(g4.n == 19);  // 5 + 4 + (2^4 - 4 - 2)
  CHECK(h_polynomial(g4) == IntPoly{{1, 15}});
  CHECK(alpha(g4) == 4);

  Graph g5 = g_family(5);
  CHECK(g5.n == 36);  // 5 + 6 + (2^5 - 5 - 2)
  CHECK(h_polynomial(g5) == IntPoly{{1, 31}});
}

TEST_CASE("g_family clique vertices are interchangeable within a generation") {
  for (int r : {3, 4, 5}) {
    Graph g = g_family(r);
    int z = g.n - ((1 << r) - r - 2);
    for (int gen = 1; gen <= r - 2; ++gen) {
      int first = z;
      VertexSet closed_first = g.adj[first] | vbit(first);
      for (int j = 0; j < (1 << (gen + 1)) - 1; ++j, ++z) {
        CHECK((g.adj[z] | vbit(z)) == closed_first);
        // generation i sees exactly the first i y-first endpoints
        for (int k = 0; k < r - 2; ++k)
          CHECK(g.has_edge(5 + 2 * k, z) == (k < gen));
      }
    }
    CHECK(z == g.n);
  }
}

TEST_CASE("realize hits the requested pair in every case split") {
  CHECK(realize(1, 1) == from_edge_list(2, {{0, 1}}));
  CHECK(realize(2, 1) == ribbon());
  Graph r42 = realize(4, 2);
  CHECK(r42.n == 12);

  for (int r = 1; r <= 3; ++r) {
    for (int d = 1; d <= 3; ++d) {
      Graph g = realize(r, d);
      CHECK(deg_h(g) == d);
      CHECK(regularity(g, kGF2, g.n) == r);
      CHECK(hilbert_series(g) == *realize_prediction(r, d).series);
    }
  }
}

TEST_CASE("realize decomposes over its connected pieces") {
  Graph g = realize(3, 2);  // ribbon plus one extra edge
  auto comps = connected_components(g);
  int reg_sum = 0, degh_sum = 0;
  for (VertexSet comp : comps) {
    Graph piece = induced_subgraph(g, comp);
    reg_sum += regularity(piece, kGF2);
    degh_sum += deg_h(piece);
  }
  CHECK(reg_sum == 3);
  CHECK(degh_sum == 2);
}

TEST_CASE("cone-update hypotheses on the worked instances") {
  Graph m2 = matching_graph(2);
  auto all4 = lemma_a_applicable(m2, m2.vertices(), kGF2);
  CHECK(all4.dim_and_h);
  CHECK(all4.reg_at_least_2);
  CHECK(all4.cardinality);
  CHECK(all4.domination);
  CHECK(all4.complement_independent);
  CHECK(all4.all());

  auto three = lemma_a_applicable(m2, vbit(0) | vbit(1) | vbit(2), kGF2);
  CHECK_FALSE(three.cardinality);
  CHECK_FALSE(three.all());

  Graph k2 = matching_graph(1);
  auto small = lemma_a_applicable(k2, k2.vertices(), kGF2);
  CHECK_FALSE(small.dim_and_h);  // dim = 1 < 2
}

TEST_CASE("an edge outside the cone subset breaks the prediction") {
  // Seven-vertex witness: {5,6} is an edge of the complement, the other four
  // hypotheses hold, and the coned series disagrees with the update formula.
  Graph g = graph6_decode("FAOvg");
  VertexSet s = vbit(0) | vbit(1) | vbit(2) | vbit(3) | vbit(4);
  auto hyp = lemma_a_applicable(g, s, kGF2, g.n);
  CHECK(hyp.dim_and_h);
  CHECK(hyp.reg_at_least_2);
  CHECK(hyp.cardinality);
  CHECK(hyp.domination);
  CHECK_FALSE(hyp.complement_independent);
  CHECK_FALSE(hyp.all());
  auto predicted = lemma_a_predict(h_polynomial(g), alpha(g));
  CHECK_FALSE(hilbert_series(cone_over_subset(g, s)) == predicted.series);
}

TEST_CASE("cone-update series prediction") {
  auto rib = lemma_a_predict(IntPoly{{1, 2, 1}}, 2);
  CHECK(rib.series == RationalSeries{IntPoly{{1, 3}}, 2});
  CHECK(rib.within_demonstrated_regime);

  auto step = lemma_a_predict(IntPoly{{1, 4, 3}}, 3);
  CHECK(step.series == RationalSeries{IntPoly{{1, 5, 2}}, 3});

  for (int r : {4, 5}) {
    std::int64_t half = std::int64_t{1} << (r - 1);
    auto general = lemma_a_predict(IntPoly{{1, half, half - 1}}, r);
    CHECK(general.series == RationalSeries{IntPoly{{1, half + 1, half - 2}}, r});
  }

  CHECK_THROWS_AS(lemma_a_predict(IntPoly{{2, 1}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(lemma_a_predict(IntPoly{{1, 1, 1, 1}}, 3), std::invalid_argument);

  auto degenerate = lemma_a_predict(IntPoly{{1, 2}}, 2);  // h2 = 0
  CHECK_FALSE(degenerate.within_demonstrated_regime);
  CHECK(degenerate.series.num == IntPoly{{1, 3, -1}});
}

TEST_CASE("the ten-vertex chain follows the cone update step by step") {
  // Start from the ribbon plus one disjoint edge; repeatedly cone over
  // everything except the last vertex of that edge.
  Graph g = disjoint_union(ribbon(), matching_graph(1));
  CHECK(hilbert_series(g) == RationalSeries{IntPoly{{1, 4, 3}}, 3});
  CHECK(regularity(g, kGF2) == 3);
  const int spare = 6;  // endpoint never included in the cone subset
  for (int step = 0; step < 3; ++step) {
    VertexSet s = g.vertices() & ~vbit(spare);
    auto hyp = lemma_a_applicable(g, s, kGF2);
    CHECK(hyp.all());
    auto predicted = lemma_a_predict(h_polynomial(g), alpha(g));
    CHECK(predicted.within_demonstrated_regime);
    Graph next = cone_over_subset(g, s);
    CHECK(hilbert_series(next) == predicted.series);
    CHECK(regularity(next, kGF2) == 3);
    g = next;
  }
  CHECK(g.n == 10);
  CHECK(h_polynomial(g) == IntPoly{{1, 7}});
}

}  // TEST_SUITE
