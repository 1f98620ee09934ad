#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rclab/complex.hpp"
#include "rclab/group.hpp"
#include "rclab/int_matrix.hpp"

namespace rclab {

// Matrix of the coboundary map out of the given degree, entries in
// {-1, 0, +1}. degree = k-1: rows are the PRESENT k-faces of y in rank
// order, columns all (k-1)-simplices. degree = k-2: the full skeleton
// (for k = 1 this is the n x 1 all-ones augmentation column).
IntMatrix coboundary_matrix(const Complex& y, int degree);

// |H^{k-1}(Y; Z_m)| computed exactly from the Smith normal forms of the two
// coboundary matrices. m >= 2.
mpz_class cohomology_order(const Complex& y, std::uint64_t m);

// The same order by exhaustive counting of cocycles and coboundaries;
// independent of the normal-form path and used as its oracle. cap bounds
// the enumeration size.
mpz_class brute_force_cohomology_order(const Complex& y, std::uint64_t m,
                                       std::uint64_t cap);

// Precomputes everything that depends only on (n, k, R); a vanishing test
// per complex then costs one mod-p rank per prime divisor of |R|.
// Thread-safe for concurrent vanishes() calls.
class VanishingTester {
 public:
  VanishingTester(int n, int k, FiniteAbelianGroup group);
  bool vanishes(const Complex& y) const;

  int n() const { return n_; }
  int k() const { return k_; }

 private:
  int n_, k_;
  FiniteAbelianGroup group_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::size_t> lower_rank_;  // rank of the degree-(k-2) matrix, per prime
  std::uint64_t cocycle_target_;         // number of (k-1)-simplices
};

// True iff the reduced cohomology in degree k-1 with coefficients in R is
// trivial, decided prime by prime.
bool vanishes(const Complex& y, const FiniteAbelianGroup& group);

struct CohomologyReport {
  int n = 0, k = 0;
  std::string group;
  // |H^{k-1}(Y; Z_m)| for each distinct factor order m, ascending.
  std::vector<std::pair<std::uint64_t, mpz_class>> order_mod;
  bool vanishes = false;
};

CohomologyReport analyze_cohomology(const Complex& y,
                                    const FiniteAbelianGroup& group);

// Header line plus one CSV row; order_mod packed as "m:order" joined by ';'.
void write_report_csv(const CohomologyReport& report, std::ostream& out);

}  // namespace rclab
