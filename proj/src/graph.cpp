#include "edgeideal/graph.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace edgeideal {

int Graph::edge_count() const {
  int total = 0;
  for (auto row : adj) total += setsize(row);
  return total / 2;
}

Graph empty_graph(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must be in 0.." +
                                std::to_string(kMaxVertices) + ", got " +
                                std::to_string(n));
  Graph g;
  g.n = n;
  g.adj.assign(n, 0);
  return g;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g = empty_graph(n);
  for (auto [u, v] : edges) {
    if (u == v)
      throw std::invalid_argument("loop edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "} rejected");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge {" + std::to_string(u) + "," +
                                  std::to_string(v) +
                                  "} out of range for n=" + std::to_string(n));
    g.adj[u] |= vbit(v);
    g.adj[v] |= vbit(u);
  }
  return g;
}

Graph induced_subgraph(const Graph& g, VertexSet w) {
  if ((w & ~g.vertices()) != 0)
    throw std::invalid_argument("subset contains out-of-range vertices");
  Graph h = empty_graph(setsize(w));
  // New label of old vertex v = number of members of w below v.
  for (int v = 0; v < g.n; ++v) {
    if (!(w & vbit(v))) continue;
    int nv = setsize(w & (vbit(v) - 1));
    VertexSet nbrs = g.adj[v] & w;
    while (nbrs) {
      int u = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      int nu = setsize(w & (vbit(u) - 1));
      h.adj[nv] |= vbit(nu);
    }
  }
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g = empty_graph(a.n + b.n);
  for (int v = 0; v < a.n; ++v) g.adj[v] = a.adj[v];
  for (int v = 0; v < b.n; ++v) g.adj[a.n + v] = b.adj[v] << a.n;
  return g;
}

Graph cone_over_subset(const Graph& g, VertexSet s) {
  if ((s & ~g.vertices()) != 0)
    throw std::invalid_argument("cone subset contains out-of-range vertices");
  Graph h = empty_graph(g.n + 1);
  for (int v = 0; v < g.n; ++v) h.adj[v] = g.adj[v];
  h.adj[g.n] = s;
  VertexSet rest = s;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    h.adj[v] |= vbit(g.n);
  }
  return h;
}

std::string graph6_encode(const Graph& g) {
  std::string out;
  out.push_back(static_cast<char>(g.n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  for (unsigned char c : text)
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6 byte out of range 63..126");
  int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kMaxVertices)
    throw std::invalid_argument(
        "graph6 header exceeds the 62-vertex cap (multi-byte sizes are not supported)");
  int pairs = n * (n - 1) / 2;
  size_t expected = 1 + (pairs + 5) / 6;
  if (text.size() != expected)
    throw std::invalid_argument("graph6 string has wrong length for n=" +
                                std::to_string(n));
  Graph g = empty_graph(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
      if ((byte >> (5 - bit % 6)) & 1) {
        g.adj[i] |= vbit(j);
        g.adj[j] |= vbit(i);
      }
    }
  }
  return g;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_n = false;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    if (!have_n) {
      if (!(ls >> n)) continue;  // blank/comment line before the header
      std::string extra;
      if (ls >> extra)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected a single vertex count");
      have_n = true;
      continue;
    }
    int u, v;
    if (!(ls >> u)) continue;
    if (!(ls >> v))
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected 'u v'");
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": trailing tokens after 'u v'");
    edges.emplace_back(u, v);
  }
  if (!have_n) throw std::invalid_argument("edge list is missing the vertex-count line");
  return from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << "\n";
  for (int v = 0; v < g.n; ++v) {
    VertexSet higher = g.adj[v] & ~(vbit(v) | (vbit(v) - 1));
    while (higher) {
      int u = std::countr_zero(higher);
      higher &= higher - 1;
      out << v << " " << u << "\n";
    }
  }
  return out.str();
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen = 0;
  for (int v = 0; v < g.n; ++v) {
    if (seen & vbit(v)) continue;
    VertexSet comp = vbit(v), frontier = vbit(v);
    while (frontier) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      VertexSet fresh = g.adj[u] & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

}  // namespace edgeideal
