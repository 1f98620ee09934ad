#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rclab/rng.hpp"
#include "rclab/simplex.hpp"

namespace rclab {

// A k-dimensional complex on [1, n] containing the full (k-1)-skeleton.
// Only the set of present k-faces is stored, by colex rank. Immutable after
// construction; safe to share across threads.
class Complex {
 public:
  Complex(int n, int k, std::vector<SimplexRank> k_faces);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<SimplexRank>& k_faces() const { return faces_; }
  std::uint64_t face_count() const { return faces_.size(); }
  // Number of candidate k-faces, C(n, k+1).
  std::uint64_t candidate_count() const;
  bool has_face(SimplexRank r) const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  int n_, k_;
  std::vector<SimplexRank> faces_;       // sorted, unique
  std::vector<std::uint64_t> present_;   // bitmap over candidate ranks
};

// One draw from the model: every candidate k-face is included independently
// with probability p. Faces are visited in rank order and consume exactly
// one uniform variate each ("include iff u < p"), so draws from the same
// seed are nested across increasing p.
Complex sample_complex(int n, int k, double p, RngSeed seed);

// Number of (k-1)-simplices with no coface among the present k-faces.
std::int64_t isolated_count(const Complex& y);

// C(n, k) (1-p)^(n-k), the expected number of isolated (k-1)-simplices.
double expected_isolated(int n, int k, double p);

// Text format: header "n k", then one present k-face per line as k+1
// strictly increasing vertex ids; '#' starts a comment line.
void write_complex(const Complex& y, std::ostream& out);
Complex parse_complex(std::istream& in);
Complex parse_complex_file(const std::string& path);

}  // namespace rclab
