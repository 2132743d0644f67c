#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace edgeideal {

// Vertex subsets are bitmasks over 0..n-1. The whole library caps graphs at
// 62 vertices: one graph6 size byte, and every subset fits a machine word.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 62;

inline VertexSet vbit(int v) { return VertexSet{1} << v; }
inline int setsize(VertexSet s) { return std::popcount(s); }

// Simple undirected graph on labeled vertices 0..n-1, no loops, adjacency
// stored as one neighbor bitmask per vertex. Values are treated as immutable
// after construction; every operation below is a pure function, so graphs can
// be shared freely across threads.
struct Graph {
  int n = 0;
  std::vector<VertexSet> adj;

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
  int degree(int v) const { return setsize(adj[v]); }
  int edge_count() const;
  VertexSet vertices() const { return n == 0 ? 0 : ~VertexSet{0} >> (64 - n); }

  bool operator==(const Graph&) const = default;
};

Graph empty_graph(int n);

// Builds a graph from unordered vertex pairs. Duplicate edges collapse;
// loops and out-of-range endpoints are rejected.
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// Subgraph induced on w, vertices relabeled 0..|w|-1 preserving order.
Graph induced_subgraph(const Graph& g, VertexSet w);

// Vertices of b are shifted by a.n; no cross edges.
Graph disjoint_union(const Graph& a, const Graph& b);

// Adds one new vertex (index g.n) adjacent to exactly the members of s.
Graph cone_over_subset(const Graph& g, VertexSet s);

// graph6: size byte n+63, then the upper-triangle adjacency bits in
// column-major order (pairs (0,1),(0,2),(1,2),(0,3),...), packed six per
// byte MSB-first, zero-padded, each byte offset by 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

// Edge-list text: first line n, then "u v" lines; '#' starts a comment.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string to_edge_list(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace edgeideal
