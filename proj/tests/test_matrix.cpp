#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "rclab/errors.hpp"
#include "rclab/int_matrix.hpp"
#include "rclab/rng.hpp"

using namespace rclab;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, UnitRng& rng) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = static_cast<long>(rng.next_below(19)) - 9;
  return m;
}

}  // namespace

TEST_CASE("smith normal form on fixed matrices") {
  CHECK(smith_normal_form(IntMatrix::identity(3)).invariant_factors ==
        std::vector<mpz_class>{1, 1, 1});
  CHECK(smith_normal_form(IntMatrix(4, 2)).invariant_factors.empty());

  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(1, 0) = 6;
  m.at(1, 1) = 8;
  // gcd of entries is 2 and |det| = 8, so the factors are 2 and 4.
  CHECK(smith_normal_form(m).invariant_factors ==
        std::vector<mpz_class>{2, 4});
}

TEST_CASE("invariant factors divide in a chain") {
  for (int trial = 0; trial < 200; ++trial) {
    UnitRng rng(derive_seed(51, {static_cast<std::uint64_t>(trial)}));
    const std::size_t rows = 1 + rng.next_below(8);
    const std::size_t cols = 1 + rng.next_below(8);
    const IntMatrix m = random_matrix(rows, cols, rng);
    const SnfResult snf = smith_normal_form(m);
    CHECK(snf.rank() <= std::min(rows, cols));
    for (std::size_t i = 0; i < snf.rank(); ++i) {
      CHECK(snf.invariant_factors[i] > 0);
      if (i + 1 < snf.rank())
        CHECK(snf.invariant_factors[i + 1] % snf.invariant_factors[i] == 0);
    }
  }
}

TEST_CASE("products of factors equal gcds of minors") {
  for (int trial = 0; trial < 40; ++trial) {
    UnitRng rng(derive_seed(53, {static_cast<std::uint64_t>(trial)}));
    const std::size_t rows = 2 + rng.next_below(3);
    const std::size_t cols = 2 + rng.next_below(3);
    const IntMatrix m = random_matrix(rows, cols, rng);
    const SnfResult snf = smith_normal_form(m);
    for (std::size_t j = 1; j <= std::min(rows, cols); ++j) {
      mpz_class minor_gcd = 0;
      for (const auto& ri : oracles::colex_subsets(static_cast<int>(rows),
                                                   static_cast<int>(j))) {
        for (const auto& ci : oracles::colex_subsets(static_cast<int>(cols),
                                                     static_cast<int>(j))) {
          std::vector<std::vector<mpz_class>> sub(j,
                                                  std::vector<mpz_class>(j));
          for (std::size_t a = 0; a < j; ++a)
            for (std::size_t b = 0; b < j; ++b)
              sub[a][b] = m.at(ri[a] - 1, ci[b] - 1);
          mpz_class det = oracles::determinant(sub);
          mpz_gcd(minor_gcd.get_mpz_t(), minor_gcd.get_mpz_t(),
                  det.get_mpz_t());
        }
      }
      mpz_class product = 1;
      if (j <= snf.rank()) {
        for (std::size_t i = 0; i < j; ++i)
          product *= snf.invariant_factors[i];
      } else {
        product = 0;
      }
      CHECK(product == minor_gcd);
    }
  }
}

TEST_CASE("rank mod p agrees with the invariant factors") {
  for (int trial = 0; trial < 200; ++trial) {
    UnitRng rng(derive_seed(57, {static_cast<std::uint64_t>(trial)}));
    const std::size_t rows = 1 + rng.next_below(8);
    const std::size_t cols = 1 + rng.next_below(8);
    const IntMatrix m = random_matrix(rows, cols, rng);
    const SnfResult snf = smith_normal_form(m);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
      std::size_t expect = 0;
      for (const mpz_class& s : snf.invariant_factors)
        if (s % static_cast<unsigned long>(p) != 0) ++expect;
      CHECK(rank_mod_p(m, p) == expect);
    }
  }
}

TEST_CASE("rank mod p basics") {
  CHECK(rank_mod_p(IntMatrix::identity(3), 2) == 3);
  IntMatrix two(1, 1);
  two.at(0, 0) = 2;
  CHECK(rank_mod_p(two, 2) == 0);
  CHECK(rank_mod_p(two, 3) == 1);
  CHECK_THROWS_AS(rank_mod_p(two, 4), PreconditionError);
  CHECK_THROWS_AS(rank_mod_p(two, 1), PreconditionError);
}

TEST_CASE("incidence matrices of connected graphs have rank n-1") {
  // Signed incidence of a random connected graph; classical rank fact,
  // checked against a union-find connectivity oracle.
  for (int trial = 0; trial < 50; ++trial) {
    UnitRng rng(derive_seed(59, {static_cast<std::uint64_t>(trial)}));
    const int n = 8;
    std::vector<std::pair<int, int>> edges;
    // A random spanning tree first, then extra random edges.
    for (int v = 2; v <= n; ++v)
      edges.emplace_back(1 + static_cast<int>(rng.next_below(v - 1)), v);
    for (int extra = 0; extra < 4; ++extra) {
      const int a = 1 + static_cast<int>(rng.next_below(n));
      const int b = 1 + static_cast<int>(rng.next_below(n));
      if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    REQUIRE(oracles::connected_graph(n, edges));
    IntMatrix inc(edges.size(), n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      inc.at(e, edges[e].first - 1) = -1;
      inc.at(e, edges[e].second - 1) = 1;
    }
    for (std::uint64_t p : {2ull, 3ull, 5ull})
      CHECK(rank_mod_p(inc, p) == static_cast<std::size_t>(n - 1));
  }
}
