#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rclab/group.hpp"
#include "rclab/rng.hpp"
#include "rclab/simplex.hpp"

namespace rclab {

// R-valued skew-symmetric function on the degree-d simplices of the full
// complex on [1, n], stored densely by colex rank. Degree -1 is allowed and
// holds the single augmentation value.
class Cochain {
 public:
  Cochain(FiniteAbelianGroup group, int n, int degree);  // the zero cochain

  const FiniteAbelianGroup& group() const { return group_; }
  int n() const { return n_; }
  int degree() const { return degree_; }
  std::uint64_t value_count() const { return values_.size(); }

  GroupCode value(SimplexRank r) const { return values_[r]; }
  void set_value(SimplexRank r, GroupCode v) { values_[r] = v; }

  // Value on an arbitrarily ordered vertex tuple: the stored value times the
  // sign of the sorting permutation; zero if a vertex repeats.
  GroupCode eval_ordered(std::span<const int> vertices) const;

  bool is_zero() const;

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  FiniteAbelianGroup group_;
  int n_, degree_;
  std::vector<GroupCode> values_;
};

Cochain add(const Cochain& a, const Cochain& b);
Cochain sub(const Cochain& a, const Cochain& b);

// Alternating sum over codimension-one faces; maps degree d to d+1. The
// degree -1 input yields the constant 0-cochain with the augmentation value.
Cochain coboundary(const Cochain& phi);

// Ranks where phi is nonzero.
std::vector<SimplexRank> support(const Cochain& phi);
std::uint64_t support_size(const Cochain& phi);

// Number of (d+1)-simplices of the FULL complex where the coboundary of phi
// is nonzero.
std::int64_t coboundary_support_size(const Cochain& phi);

// Exact minimum of |supp(phi + d psi)| over all psi one degree down
// (degree -1 constants included, so for 0-cochains the constants count as
// coboundaries). Throws CapExceededError when the psi space exceeds cap.
std::uint64_t weight_bruteforce(const Cochain& phi,
                                std::uint64_t cap = std::uint64_t{1} << 22);

// The degree-(d-1) cochain tau -> phi(u tau) (zero when u lies in tau),
// with u prepended and the evaluation sign carried by skew symmetry.
Cochain contraction(const Cochain& phi, int u);

// Cochain of degree k-1 attached to the partition of [1, n] into k+1
// consecutive blocks of size n/(k+1): value "1" exactly on the tuples with
// one vertex in each of the first k blocks. Requires (k+1) | n.
Cochain balanced_partition_cochain(const FiniteAbelianGroup& group, int n,
                                   int k);

// True iff supp(phi) is connected as a uniform hypergraph (consecutive
// members sharing all but one vertex); vacuously true for |supp| <= 1.
bool is_connected_support(const Cochain& phi);

// Nonzero, connected support, and weight equal to the support size: the
// cochains that achieve their coset minimum on the nose.
bool is_weight_minimal_connected(const Cochain& phi,
                                 std::uint64_t cap = std::uint64_t{1} << 22);

// Uniform random values on every simplex of the degree.
Cochain random_cochain(const FiniteAbelianGroup& group, int n, int degree,
                       UnitRng& rng);

}  // namespace rclab
