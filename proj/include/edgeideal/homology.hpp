#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

enum class FieldTag { GF2, GFp, Rational };

// Coefficient field for homology: GF(2), GF(p) for an odd prime p, or the
// rationals (exact fraction-free elimination).
struct Field {
  FieldTag tag = FieldTag::GF2;
  int p = 2;

  static Field gf2() { return {FieldTag::GF2, 2}; }
  static Field gfp(int p);
  static Field rationals() { return {FieldTag::Rational, 0}; }

  std::string name() const;
  bool operator==(const Field&) const = default;
};

// Accepts "gf2", "GF(2)", "gf3", "3", "q", "qq", "rational", ...
Field parse_field(const std::string& text);

// Faces of a simplicial complex grouped by cardinality: by_size[s] lists the
// size-s faces as vertex bitmasks in increasing mask order. by_size[0] is
// always {0} (the empty face); the complexes produced here are never void.
struct FaceList {
  std::vector<std::vector<VertexSet>> by_size;

  int dim() const { return static_cast<int>(by_size.size()) - 2; }
  long long face_count() const;
};

// All independent sets of g, grouped by cardinality. Enumerated by recursing
// over vertices with neighbor pruning, so only independent sets are visited.
FaceList independence_faces(const Graph& g);

// Faces of the independence complex of the induced subgraph on w, keeping the
// original vertex labels.
FaceList independence_faces_within(const Graph& g, VertexSet w);

// dims[k+1] = dim of the k-th reduced homology over f, for k = -1 .. dim().
// The empty face makes the chain complex augmented: the complex {{}} has
// dims = {1}, which is what Hochster's formula needs for the empty subset.
std::vector<long long> reduced_homology_dims(const FaceList& faces, const Field& f);

// Largest k with nonzero k-th reduced homology, or kNoHomology when all
// degrees vanish. Works top-down reusing boundary ranks, so callers that only
// need the top degree never pay for the layers below it.
inline constexpr int kNoHomology = -2;
int top_nonzero_homology_degree(const FaceList& faces, const Field& f);

// Signed boundary matrix of C_k -> C_{k-1} (rows = k-faces in by_size[k+1],
// columns = (k-1)-faces). Exposed for the chain-complex tests.
std::vector<std::vector<std::int64_t>> boundary_matrix(const FaceList& faces, int k);

}  // namespace edgeideal
