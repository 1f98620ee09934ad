#include <algorithm>
#include <vector>

#include "doctest.h"
#include "rclab/cochain.hpp"
#include "rclab/errors.hpp"

using namespace rclab;

namespace {

const FiniteAbelianGroup z2{{2}};
const FiniteAbelianGroup z3{{3}};
const FiniteAbelianGroup z2z2{{2, 2}};
const FiniteAbelianGroup z6{{6}};

SimplexRank rk(std::vector<int> verts) { return rank_of_sorted(verts); }

}  // namespace

TEST_CASE("group spec parsing and arithmetic") {
  CHECK(FiniteAbelianGroup::parse("Z2") == z2);
  CHECK(FiniteAbelianGroup::parse("Z2xZ4").order() == 8);
  CHECK(FiniteAbelianGroup::parse("z3xz2").name() == "Z3xZ2");
  CHECK_THROWS_AS(FiniteAbelianGroup::parse(""), ParseError);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("Z"), ParseError);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("Z1"), ParseError);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("Z2x"), ParseError);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("Q8"), ParseError);

  const FiniteAbelianGroup g = FiniteAbelianGroup::parse("Z2xZ4");
  for (GroupCode a = 0; a < g.order(); ++a) {
    CHECK(g.add(a, g.neg(a)) == g.zero());
    CHECK(g.from_residues(g.residues(a)) == a);
    for (GroupCode b = 0; b < g.order(); ++b)
      CHECK(g.add(a, b) == g.add(b, a));
  }
  CHECK(g.prime_divisors() == std::vector<std::uint32_t>{2});
  CHECK(z6.prime_divisors() == std::vector<std::uint32_t>{2, 3});
}

TEST_CASE("evaluation is skew symmetric") {
  UnitRng rng(11);
  Cochain phi = random_cochain(z3, 6, 2, rng);
  std::vector<int> tuple{2, 4, 5};
  const GroupCode base = phi.eval_ordered(tuple);
  // One transposition flips the sign.
  std::vector<int> swapped{4, 2, 5};
  CHECK(phi.eval_ordered(swapped) == z3.neg(base));
  std::vector<int> cycled{5, 2, 4};  // even permutation
  CHECK(phi.eval_ordered(cycled) == base);
  std::vector<int> degenerate{2, 2, 5};
  CHECK(phi.eval_ordered(degenerate) == z3.zero());
}

TEST_CASE("coboundary of a 0-cochain is the difference on edges") {
  UnitRng rng(3);
  const Cochain phi = random_cochain(z6, 5, 0, rng);
  const Cochain d = coboundary(phi);
  std::vector<int> verts;
  for (SimplexRank r = 0; r < d.value_count(); ++r) {
    unrank_into(r, 2,5, verts);
    const GroupCode expect =
        z6.sub(phi.value(rk({verts[1]})), phi.value(rk({verts[0]})));
    CHECK(d.value(r) == expect);
  }
}

TEST_CASE("coboundary of the augmentation is constant") {
  Cochain a(z6, 4, -1);
  a.set_value(0, 5);
  const Cochain d = coboundary(a);
  REQUIRE(d.value_count() == 4);
  for (SimplexRank r = 0; r < 4; ++r) CHECK(d.value(r) == 5);
}

TEST_CASE("coboundary of an edge indicator over Z2") {
  Cochain phi(z2, 4, 1);
  phi.set_value(rk({1, 2}), 1);
  const Cochain d = coboundary(phi);
  CHECK(d.value(rk({1, 2, 3})) == 1);
  CHECK(d.value(rk({1, 2, 4})) == 1);
  CHECK(d.value(rk({1, 3, 4})) == 0);
  CHECK(d.value(rk({2, 3, 4})) == 0);
}

TEST_CASE("d after d is zero") {
  for (const auto& g : {z2, z3, z2z2, z6}) {
    for (int n = 3; n <= 8; ++n) {
      for (int degree = -1; degree <= std::min(2, n - 3); ++degree) {
        UnitRng rng(derive_seed(17, {static_cast<std::uint64_t>(g.order()),
                                     static_cast<std::uint64_t>(n),
                                     static_cast<std::uint64_t>(degree + 1)}));
        const Cochain phi = random_cochain(g, n, degree, rng);
        CHECK(coboundary(coboundary(phi)).is_zero());
      }
    }
  }
}

TEST_CASE("support and coboundary support size") {
  Cochain zero(z2, 6, 1);
  CHECK(support(zero).empty());
  CHECK(coboundary_support_size(coboundary(Cochain(z2, 6, 0))) == 0);

  // Indicator of one (k-1)-simplex: the coboundary is nonzero exactly on
  // its cofaces, n - k of them.
  for (int n : {5, 6, 7}) {
    Cochain phi(z3, n, 1);
    phi.set_value(rk({2, 3}), 1);
    CHECK(support(phi) == std::vector<SimplexRank>{rk({2, 3})});
    CHECK(coboundary_support_size(phi) == n - 2);
  }

  // A coboundary has b = 0 one degree up: d(d psi) = 0.
  UnitRng rng(23);
  const Cochain psi = random_cochain(z6, 6, 0, rng);
  CHECK(coboundary_support_size(coboundary(psi)) == 0);
}

TEST_CASE("brute force weight") {
  // A coboundary has weight zero.
  UnitRng rng(29);
  const Cochain psi = random_cochain(z3, 5, 0, rng);
  CHECK(weight_bruteforce(coboundary(psi)) == 0);

  // k=1 over Z2 on [4]: the coset of the {1,2} indicator contains only the
  // indicator itself and its complement, both of support 2.
  Cochain phi(z2, 4, 0);
  phi.set_value(rk({1}), 1);
  phi.set_value(rk({2}), 1);
  CHECK(weight_bruteforce(phi) == 2);

  CHECK_THROWS_AS(weight_bruteforce(phi, 2), CapExceededError);
}

TEST_CASE("contraction") {
  const Cochain zero(z3, 6, 1);
  CHECK(contraction(zero, 4).is_zero());

  // Degree 0: the contraction at u is the constant phi(u).
  UnitRng rng(31);
  const Cochain f = random_cochain(z6, 5, 0, rng);
  for (int u = 1; u <= 5; ++u) {
    const Cochain fu = contraction(f, u);
    CHECK(fu.degree() == -1);
    CHECK(fu.value(0) == f.value(rk({u})));
  }
}

TEST_CASE("contraction identity and counting identity") {
  // phi(sigma) - d phi_u (sigma) equals d phi (u sigma) when u is outside
  // sigma and zero otherwise; summing supports over u recovers
  // (k+1) |supp d phi|.
  const int n = 6, k = 2;
  for (int trial = 0; trial < 100; ++trial) {
    UnitRng rng(derive_seed(37, {static_cast<std::uint64_t>(trial)}));
    const Cochain phi = random_cochain(z3, n, k - 1, rng);
    const Cochain dphi = coboundary(phi);
    const int u = 1 + static_cast<int>(rng.next_below(n));
    const Cochain dphi_u = coboundary(contraction(phi, u));
    std::vector<int> sigma;
    unrank_into(rng.next_below(binomial(n, k)), k, n, sigma);
    const GroupCode lhs = z3.sub(phi.value(rank_of_sorted(sigma)),
                                 dphi_u.value(rank_of_sorted(sigma)));
    const bool inside = std::find(sigma.begin(), sigma.end(), u) != sigma.end();
    if (inside) {
      CHECK(lhs == z3.zero());
    } else {
      std::vector<int> usigma{u};
      usigma.insert(usigma.end(), sigma.begin(), sigma.end());
      CHECK(lhs == dphi.eval_ordered(usigma));
    }
  }

  for (int trial = 0; trial < 20; ++trial) {
    UnitRng rng(derive_seed(41, {static_cast<std::uint64_t>(trial)}));
    const Cochain phi = random_cochain(z2z2, n, k - 1, rng);
    std::uint64_t total = 0;
    for (int u = 1; u <= n; ++u)
      total += support_size(sub(phi, coboundary(contraction(phi, u))));
    CHECK(total == static_cast<std::uint64_t>(k + 1) *
                       support_size(coboundary(phi)));
  }
}

TEST_CASE("balanced partition cochain") {
  const Cochain tiny = balanced_partition_cochain(z2, 3, 2);
  CHECK(support_size(tiny) == 1);
  CHECK(coboundary_support_size(tiny) == 1);

  const Cochain mid = balanced_partition_cochain(z2, 6, 2);
  CHECK(support_size(mid) == 4);
  CHECK(coboundary_support_size(mid) == 8);
  CHECK(weight_bruteforce(mid) == 4);

  const Cochain cut = balanced_partition_cochain(z2, 4, 1);
  CHECK(support(cut) == std::vector<SimplexRank>{rk({1}), rk({2})});
  CHECK(coboundary_support_size(cut) == 4);

  CHECK_THROWS_AS(balanced_partition_cochain(z2, 5, 2), PreconditionError);
}

TEST_CASE("connected support and the weight-minimal class") {
  Cochain zero(z2, 5, 1);
  CHECK(is_connected_support(zero));  // vacuous
  CHECK_FALSE(is_weight_minimal_connected(zero));

  Cochain singleton(z2, 5, 1);
  singleton.set_value(rk({2, 3}), 1);
  CHECK(is_connected_support(singleton));
  CHECK(is_weight_minimal_connected(singleton));

  Cochain split(z2, 5, 1);
  split.set_value(rk({1, 2}), 1);
  split.set_value(rk({4, 5}), 1);
  CHECK_FALSE(is_connected_support(split));
  CHECK_FALSE(is_weight_minimal_connected(split));

  // The n=6 partition support {13,14,23,24} is pairwise linked through
  // shared vertices, so it lands in the class (weight 4 = support 4).
  const Cochain mid = balanced_partition_cochain(z2, 6, 2);
  CHECK(is_connected_support(mid));
  CHECK(is_weight_minimal_connected(mid));
}
