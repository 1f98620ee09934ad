#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rclab/rng.hpp"
#include "rclab/simplex.hpp"

namespace rclab {

// A k-uniform hypergraph F on [1, n]: a set of k-element vertex sets,
// stored by colex rank.
class UniformFamily {
 public:
  UniformFamily(int n, int k, std::vector<SimplexRank> members);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<SimplexRank>& members() const { return members_; }
  std::int64_t size() const { return static_cast<std::int64_t>(members_.size()); }
  bool contains(SimplexRank r) const;

  friend bool operator==(const UniformFamily&, const UniformFamily&) = default;

 private:
  int n_, k_;
  std::vector<SimplexRank> members_;  // sorted, unique
};

// Number of (k+1)-sets tau containing sigma whose k-subsets meet F in
// {sigma} alone. At most n - k. Throws when sigma is not a member.
std::int64_t exclusive_cover_count(const UniformFamily& f, SimplexRank sigma);

// Sum of exclusive_cover_count over all members; at most |F| (n - k).
std::int64_t exclusive_cover_total(const UniformFamily& f);

// Members of F sharing exactly k-1 vertices with some member of s. A member
// of s itself qualifies only through a distinct partner, per the literal
// definition. Requires s to be a subset of F.
std::vector<SimplexRank> dominated_members(const UniformFamily& f,
                                           std::span<const SimplexRank> s);

// Connectivity in the chain sense: every two members linked by a sequence
// of members with consecutive intersections of size k-1.
bool is_connected_family(const UniformFamily& f);

// One round of the randomized partial domination: include each member
// independently with probability 2 log(1/epsilon) / (n - k). Preconditions
// (0 < epsilon <= 1/2 and n > 2 log(1/epsilon) + k) guarantee the
// probability is below 1; pass enforce_preconditions = false to skip the
// checks and clamp instead.
std::vector<SimplexRank> sample_partial_dominating_set(
    const UniformFamily& f, double epsilon, RngSeed seed,
    bool enforce_preconditions = true);

struct DominationOutcome {
  std::vector<SimplexRank> members;  // the selected subfamily S
  std::int64_t dominated_count = 0;  // size of its dominated set
  int retries = 0;                   // failed draws before this one
  double epsilon = 0;
  double theta = 0;
};

// |S| must stay within this for an outcome to count as a success.
double partial_domination_size_bound(int n, int k, std::int64_t m,
                                     double epsilon, double theta);

// Las Vegas wrapper: redraws until the dominated set reaches
// (1-epsilon) theta m AND the size bound holds, or retries run out.
// Requires the cover hypothesis exclusive_cover_total(f) <=
// (1-theta) m (n-k). max_retries = 0 picks ceil(50 / (eps (1-eps) theta)).
DominationOutcome find_partial_dominating_set(const UniformFamily& f,
                                              double epsilon, double theta,
                                              RngSeed seed,
                                              int max_retries = 0);

// m distinct members drawn uniformly from all k-subsets of [1, n].
UniformFamily random_family(int n, int k, int m, RngSeed seed);

}  // namespace rclab
