#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rclab/binomial.hpp"

namespace rclab {

// Position of a simplex among all simplices of its dimension under the
// colexicographic order. Ranks do not depend on n, so they stay valid when
// the vertex set grows.
using SimplexRank = std::uint64_t;

// A simplex of the full complex on the vertex set [1, n], stored as a
// strictly increasing vertex tuple (the canonical orientation). The empty
// tuple is the unique (-1)-dimensional simplex used by the augmentation.
class CanonicalSimplex {
 public:
  CanonicalSimplex() = default;  // the empty simplex
  explicit CanonicalSimplex(std::vector<int> vertices);
  static CanonicalSimplex from_sorted_unchecked(std::vector<int> vertices);

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  const std::vector<int>& vertices() const { return verts_; }
  bool contains(int v) const;

  friend bool operator==(const CanonicalSimplex&,
                         const CanonicalSimplex&) = default;
  friend auto operator<=>(const CanonicalSimplex&,
                          const CanonicalSimplex&) = default;

 private:
  std::vector<int> verts_;
};

// Colex rank of a strictly increasing vertex tuple (1-based vertices).
SimplexRank rank_of_sorted(std::span<const int> vertices);

// Rank within the simplices of dim(s) on [1, n]; validates s against n.
SimplexRank rank_simplex(const CanonicalSimplex& s, int n);

// Inverse of rank_simplex for the given dimension. Throws when r is out of
// range for (dim, n).
CanonicalSimplex unrank_simplex(SimplexRank r, int dim, int n);

// Low-level unrank into a reusable buffer; out gets vertex_count entries.
void unrank_into(SimplexRank r, int vertex_count, int n, std::vector<int>& out);

// The dim+1 codimension-one faces of s in deletion order: the i-th entry
// drops the i-th smallest vertex and carries sign (-1)^i. For a vertex the
// single face is the empty simplex with sign +1.
std::vector<std::pair<CanonicalSimplex, int>> faces_with_signs(
    const CanonicalSimplex& s);

// All simplices s + {v} for v not in s, ordered by the added vertex.
// Exactly n - dim(s) - 1 of them.
std::vector<CanonicalSimplex> cofaces(const CanonicalSimplex& s, int n);

}  // namespace rclab
