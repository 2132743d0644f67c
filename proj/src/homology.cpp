#include "edgeideal/homology.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace edgeideal {

namespace {

bool is_odd_prime(long long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::gfp(int p) {
  if (p == 2) return gf2();
  if (!is_odd_prime(p))
    throw std::invalid_argument("GF(p) requires an odd prime, got " + std::to_string(p));
  return {FieldTag::GFp, p};
}

std::string Field::name() const {
  switch (tag) {
    case FieldTag::GF2: return "GF(2)";
    case FieldTag::GFp: return "GF(" + std::to_string(p) + ")";
    case FieldTag::Rational: return "QQ";
  }
  return "?";
}

Field parse_field(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "q" || s == "qq" || s == "rational" || s == "rationals") return Field::rationals();
  if (s.rfind("gf(", 0) == 0 && s.back() == ')') s = s.substr(3, s.size() - 4);
  else if (s.rfind("gf", 0) == 0) s = s.substr(2);
  try {
    size_t used = 0;
    int p = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(text);
    return p == 2 ? Field::gf2() : Field::gfp(p);
  } catch (const std::exception&) {
    throw std::invalid_argument("unrecognized field '" + text + "'");
  }
}

long long FaceList::face_count() const {
  long long total = 0;
  for (const auto& layer : by_size) total += static_cast<long long>(layer.size());
  return total;
}

FaceList independence_faces_within(const Graph& g, VertexSet w) {
  if ((w & ~g.vertices()) != 0)
    throw std::invalid_argument("subset contains out-of-range vertices");
  FaceList out;
  out.by_size.push_back({0});
  // cand always holds vertices above every chosen one and adjacent to none,
  // so each recursion node is a distinct independent set.
  auto rec = [&](auto&& self, VertexSet chosen, VertexSet cand) -> void {
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      VertexSet next = chosen | vbit(v);
      size_t s = static_cast<size_t>(setsize(next));
      if (out.by_size.size() <= s) out.by_size.resize(s + 1);
      out.by_size[s].push_back(next);
      self(self, next, cand & ~g.adj[v]);
    }
  };
  rec(rec, 0, w);
  for (auto& layer : out.by_size) std::sort(layer.begin(), layer.end());
  return out;
}

FaceList independence_faces(const Graph& g) {
  return independence_faces_within(g, g.vertices());
}

namespace {

int face_index(const std::vector<VertexSet>& layer, VertexSet mask) {
  auto it = std::lower_bound(layer.begin(), layer.end(), mask);
  return static_cast<int>(it - layer.begin());
}

// Rank of the boundary map from size-s faces to size-(s-1) faces.

long long rank_boundary_gf2(const FaceList& faces, int s) {
  const auto& rows_faces = faces.by_size[s];
  const auto& cols_faces = faces.by_size[s - 1];
  int cols = static_cast<int>(cols_faces.size());
  int words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivot_rows;
  std::vector<int> pivot_at(cols, -1);
  long long rank = 0;
  std::vector<std::uint64_t> row(words);
  for (VertexSet face : rows_faces) {
    std::fill(row.begin(), row.end(), 0);
    VertexSet rest = face;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int idx = face_index(cols_faces, face ^ vbit(v));
      row[idx >> 6] ^= std::uint64_t{1} << (idx & 63);
    }
    for (;;) {
      int lead = -1;
      for (int wd = 0; wd < words; ++wd) {
        if (row[wd]) {
          lead = wd * 64 + std::countr_zero(row[wd]);
          break;
        }
      }
      if (lead < 0) break;
      if (pivot_at[lead] < 0) {
        pivot_at[lead] = static_cast<int>(pivot_rows.size());
        pivot_rows.push_back(row);
        ++rank;
        break;
      }
      const auto& pr = pivot_rows[pivot_at[lead]];
      for (int wd = 0; wd < words; ++wd) row[wd] ^= pr[wd];
    }
  }
  return rank;
}

long long mod_inverse(long long a, long long p) {
  long long t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    long long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  return ((t % p) + p) % p;
}

// Signed boundary rows as dense integer vectors; sign of the i-th smallest
// vertex of a face is (-1)^i.
std::vector<std::int64_t> signed_boundary_row(const std::vector<VertexSet>& cols_faces,
                                              VertexSet face) {
  std::vector<std::int64_t> row(cols_faces.size(), 0);
  VertexSet rest = face;
  int pos = 0;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    int idx = face_index(cols_faces, face ^ vbit(v));
    row[idx] = (pos % 2 == 0) ? 1 : -1;
    ++pos;
  }
  return row;
}

long long rank_boundary_gfp(const FaceList& faces, int s, long long p) {
  const auto& rows_faces = faces.by_size[s];
  const auto& cols_faces = faces.by_size[s - 1];
  int cols = static_cast<int>(cols_faces.size());
  std::vector<std::vector<std::int64_t>> pivot_rows;
  std::vector<int> pivot_at(cols, -1);
  long long rank = 0;
  for (VertexSet face : rows_faces) {
    auto row = signed_boundary_row(cols_faces, face);
    for (auto& x : row) x = ((x % p) + p) % p;
    for (int c = 0; c < cols; ++c) {
      if (row[c] == 0) continue;
      if (pivot_at[c] < 0) {
        long long inv = mod_inverse(row[c], p);
        for (auto& x : row) x = x * inv % p;
        pivot_at[c] = static_cast<int>(pivot_rows.size());
        pivot_rows.push_back(std::move(row));
        ++rank;
        break;
      }
      const auto& pr = pivot_rows[pivot_at[c]];
      long long factor = row[c];
      for (int j = c; j < cols; ++j)
        row[j] = ((row[j] - factor * pr[j]) % p + p) % p;
    }
  }
  return rank;
}

// Fraction-free (Bareiss) elimination; entries stay exact minors, division by
// the previous pivot is exact. Overflow throws rather than wrapping.
long long rank_rational_matrix(std::vector<std::vector<std::int64_t>> m) {
  int nrow = static_cast<int>(m.size());
  if (nrow == 0) return 0;
  int ncol = static_cast<int>(m[0].size());
  long long rank = 0;
  std::int64_t prev = 1;
  for (int c = 0; c < ncol && rank < nrow; ++c) {
    int piv = -1;
    for (int i = static_cast<int>(rank); i < nrow; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int i = static_cast<int>(rank) + 1; i < nrow; ++i) {
      for (int j = c + 1; j < ncol; ++j) {
        __int128 t = static_cast<__int128>(m[i][j]) * m[rank][c] -
                     static_cast<__int128>(m[i][c]) * m[rank][j];
        if (t % prev != 0)
          throw std::logic_error("fraction-free elimination lost exactness");
        t /= prev;
        if (t > std::numeric_limits<std::int64_t>::max() ||
            t < std::numeric_limits<std::int64_t>::min())
          throw std::overflow_error("rank computation over QQ overflowed 64 bits");
        m[i][j] = static_cast<std::int64_t>(t);
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

long long rank_boundary_rational(const FaceList& faces, int s) {
  const auto& rows_faces = faces.by_size[s];
  const auto& cols_faces = faces.by_size[s - 1];
  std::vector<std::vector<std::int64_t>> m;
  m.reserve(rows_faces.size());
  for (VertexSet face : rows_faces) m.push_back(signed_boundary_row(cols_faces, face));
  return rank_rational_matrix(std::move(m));
}

long long rank_boundary(const FaceList& faces, int s, const Field& f) {
  if (s <= 0 || s >= static_cast<int>(faces.by_size.size())) return 0;
  if (faces.by_size[s].empty()) return 0;
  switch (f.tag) {
    case FieldTag::GF2: return rank_boundary_gf2(faces, s);
    case FieldTag::GFp: return rank_boundary_gfp(faces, s, f.p);
    case FieldTag::Rational: return rank_boundary_rational(faces, s);
  }
  return 0;
}

}  // namespace

std::vector<long long> reduced_homology_dims(const FaceList& faces, const Field& f) {
  int max_size = static_cast<int>(faces.by_size.size()) - 1;
  std::vector<long long> ranks(max_size + 2, 0);  // ranks[s]: size-s faces -> size-(s-1)
  for (int s = 1; s <= max_size; ++s) ranks[s] = rank_boundary(faces, s, f);
  std::vector<long long> dims(max_size + 1, 0);
  for (int k = -1; k < max_size; ++k) {
    long long fk = static_cast<long long>(faces.by_size[k + 1].size());
    dims[k + 1] = fk - ranks[k + 1] - ranks[k + 2];
  }
  return dims;
}

int top_nonzero_homology_degree(const FaceList& faces, const Field& f) {
  int max_size = static_cast<int>(faces.by_size.size()) - 1;
  long long rank_above = 0;  // rank of the boundary one level up
  for (int k = max_size - 1; k >= -1; --k) {
    long long rank_here = rank_boundary(faces, k + 1, f);
    long long fk = static_cast<long long>(faces.by_size[k + 1].size());
    if (fk - rank_here - rank_above > 0) return k;
    rank_above = rank_here;
  }
  return kNoHomology;
}

std::vector<std::vector<std::int64_t>> boundary_matrix(const FaceList& faces, int k) {
  if (k < 0 || k + 1 >= static_cast<int>(faces.by_size.size()))
    throw std::invalid_argument("boundary degree out of range");
  const auto& rows_faces = faces.by_size[k + 1];
  const auto& cols_faces = faces.by_size[k];
  std::vector<std::vector<std::int64_t>> m;
  m.reserve(rows_faces.size());
  for (VertexSet face : rows_faces) m.push_back(signed_boundary_row(cols_faces, face));
  return m;
}

}  // namespace edgeideal
