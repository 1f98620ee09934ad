#include "rclab/simplex.hpp"

#include <algorithm>

#include "rclab/errors.hpp"

namespace rclab {

CanonicalSimplex::CanonicalSimplex(std::vector<int> vertices)
    : verts_(std::move(vertices)) {
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (verts_[i] < 1)
      throw PreconditionError("simplex: vertex ids are 1-based");
    if (i > 0 && verts_[i] <= verts_[i - 1])
      throw PreconditionError("simplex: vertices must strictly increase");
  }
}

CanonicalSimplex CanonicalSimplex::from_sorted_unchecked(
    std::vector<int> vertices) {
  CanonicalSimplex s;
  s.verts_ = std::move(vertices);
  return s;
}

bool CanonicalSimplex::contains(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

SimplexRank rank_of_sorted(std::span<const int> vertices) {
  SimplexRank r = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    r += binomial(vertices[i] - 1, static_cast<int>(i) + 1);
  return r;
}

SimplexRank rank_simplex(const CanonicalSimplex& s, int n) {
  const auto& v = s.vertices();
  if (!v.empty() && v.back() > n)
    throw PreconditionError("rank_simplex: vertex exceeds n");
  return rank_of_sorted(v);
}

void unrank_into(SimplexRank r, int vertex_count, int n,
                 std::vector<int>& out) {
  if (vertex_count < 0 || vertex_count > n)
    throw PreconditionError("unrank: vertex count out of range");
  if (r >= binomial(n, vertex_count))
    throw PreconditionError("unrank: rank out of range");
  out.assign(vertex_count, 0);
  for (int i = vertex_count; i >= 1; --i) {
    // Largest c with C(c, i) <= r; the i-th vertex is c+1.
    int c = i - 1;
    while (c + 1 <= n - 1 && binomial(c + 1, i) <= r) ++c;
    out[i - 1] = c + 1;
    r -= binomial(c, i);
  }
}

CanonicalSimplex unrank_simplex(SimplexRank r, int dim, int n) {
  if (dim < -1) throw PreconditionError("unrank: dim < -1");
  std::vector<int> verts;
  unrank_into(r, dim + 1, n, verts);
  return CanonicalSimplex::from_sorted_unchecked(std::move(verts));
}

std::vector<std::pair<CanonicalSimplex, int>> faces_with_signs(
    const CanonicalSimplex& s) {
  if (s.dim() < 0)
    throw PreconditionError("faces_with_signs: empty simplex has no faces");
  const auto& v = s.vertices();
  std::vector<std::pair<CanonicalSimplex, int>> out;
  out.reserve(v.size());
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<int> face;
    face.reserve(v.size() - 1);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j != i) face.push_back(v[j]);
    out.emplace_back(CanonicalSimplex::from_sorted_unchecked(std::move(face)),
                     sign);
    sign = -sign;
  }
  return out;
}

std::vector<CanonicalSimplex> cofaces(const CanonicalSimplex& s, int n) {
  if (s.dim() + 1 > n - 1)
    throw PreconditionError("cofaces: no room above top dimension");
  const auto& v = s.vertices();
  if (!v.empty() && v.back() > n)
    throw PreconditionError("cofaces: vertex exceeds n");
  std::vector<CanonicalSimplex> out;
  out.reserve(n - v.size());
  for (int u = 1; u <= n; ++u) {
    if (s.contains(u)) continue;
    std::vector<int> verts;
    verts.reserve(v.size() + 1);
    bool placed = false;
    for (int w : v) {
      if (!placed && u < w) {
        verts.push_back(u);
        placed = true;
      }
      verts.push_back(w);
    }
    if (!placed) verts.push_back(u);
    out.push_back(CanonicalSimplex::from_sorted_unchecked(std::move(verts)));
  }
  return out;
}

}  // namespace rclab
