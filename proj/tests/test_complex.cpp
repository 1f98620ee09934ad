#include <cmath>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "rclab/complex.hpp"
#include "rclab/errors.hpp"

using namespace rclab;

TEST_CASE("degenerate sampling probabilities") {
  const Complex empty = sample_complex(5, 2, 0.0, RngSeed{123});
  CHECK(empty.face_count() == 0);
  const Complex full = sample_complex(5, 2, 1.0, RngSeed{123});
  CHECK(full.face_count() == 10);
  CHECK_THROWS_AS(sample_complex(5, 2, 1.5, RngSeed{1}), PreconditionError);
  CHECK_THROWS_AS(sample_complex(5, 2, -0.1, RngSeed{1}), PreconditionError);
  CHECK_THROWS_AS(sample_complex(5, 5, 0.5, RngSeed{1}), PreconditionError);
}

TEST_CASE("sample mean face count sits near p C(n,k+1)") {
  const int trials = 10000;
  const double p = 0.3;
  double sum = 0;
  for (int t = 0; t < trials; ++t) {
    const RngSeed seed{derive_seed(99, {static_cast<std::uint64_t>(t)})};
    sum += static_cast<double>(sample_complex(20, 2, p, seed).face_count());
  }
  const double mean = sum / trials;
  const double expect = p * static_cast<double>(binomial(20, 3));  // 342
  const double se = std::sqrt(expect * (1 - p) / trials);
  CHECK(std::abs(mean - expect) <= 3 * se);
}

TEST_CASE("same seed reproduces the same complex") {
  const Complex a = sample_complex(12, 2, 0.37, RngSeed{2024});
  const Complex b = sample_complex(12, 2, 0.37, RngSeed{2024});
  CHECK(a == b);
}

TEST_CASE("samples from one seed are nested across p") {
  for (int t = 0; t < 25; ++t) {
    const RngSeed seed{derive_seed(5, {static_cast<std::uint64_t>(t)})};
    UnitRng pr(derive_seed(6, {static_cast<std::uint64_t>(t)}));
    double p1 = pr.next_unit(), p2 = pr.next_unit();
    if (p1 > p2) std::swap(p1, p2);
    const Complex small = sample_complex(10, 2, p1, seed);
    const Complex big = sample_complex(10, 2, p2, seed);
    for (SimplexRank r : small.k_faces()) CHECK(big.has_face(r));
  }
}

TEST_CASE("isolated count") {
  const Complex empty(6, 2, {});
  CHECK(isolated_count(empty) == 15);  // every edge isolated
  const Complex full = sample_complex(6, 2, 1.0, RngSeed{0});
  CHECK(isolated_count(full) == 0);

  // n=4 graphs: edges {12, 34} leave nothing isolated, {12} leaves 3 and 4.
  const Complex both(4, 1,
                     {rank_of_sorted(std::vector<int>{1, 2}),
                      rank_of_sorted(std::vector<int>{3, 4})});
  CHECK(isolated_count(both) == 0);
  const Complex one(4, 1, {rank_of_sorted(std::vector<int>{1, 2})});
  CHECK(isolated_count(one) == 2);
}

TEST_CASE("expected isolated value and Monte Carlo agreement") {
  CHECK(expected_isolated(10, 2, 0.0) == 45.0);
  CHECK(expected_isolated(10, 2, 1.0) == 0.0);
  CHECK(expected_isolated(10, 2, 0.5) == doctest::Approx(0.17578125).epsilon(1e-12));

  const int trials = 2000;
  const int n = 12, k = 2;
  const double p = 0.15;
  double sum = 0, sq = 0;
  for (int t = 0; t < trials; ++t) {
    const RngSeed seed{derive_seed(7, {static_cast<std::uint64_t>(t)})};
    const double g =
        static_cast<double>(isolated_count(sample_complex(n, k, p, seed)));
    sum += g;
    sq += g * g;
  }
  const double mean = sum / trials;
  const double var = (sq - trials * mean * mean) / (trials - 1);
  const double tol = 3 * std::sqrt(var / trials);
  CHECK(std::abs(mean - expected_isolated(n, k, p)) <= tol);
}

TEST_CASE("complex file round trip") {
  const Complex y(4, 1,
                  {rank_of_sorted(std::vector<int>{1, 2}),
                   rank_of_sorted(std::vector<int>{3, 4})});
  std::stringstream buf;
  write_complex(y, buf);
  CHECK(buf.str() == "4 1\n1 2\n3 4\n");
  CHECK(parse_complex(buf) == y);

  std::stringstream only_header("6 2\n");
  const Complex empty = parse_complex(only_header);
  CHECK(empty.face_count() == 0);
  CHECK(empty.n() == 6);

  std::stringstream with_comments("# generated\n5 2\n# faces\n1 2 3\n");
  CHECK(parse_complex(with_comments).face_count() == 1);
}

TEST_CASE("complex file rejects malformed input") {
  std::stringstream degenerate("4 1\n2 2\n");
  CHECK_THROWS_AS(parse_complex(degenerate), ParseError);
  std::stringstream out_of_range("4 1\n1 5\n");
  CHECK_THROWS_AS(parse_complex(out_of_range), ParseError);
  std::stringstream duplicate("4 1\n1 2\n1 2\n");
  CHECK_THROWS_AS(parse_complex(duplicate), ParseError);
  std::stringstream bad_header("x 1\n");
  CHECK_THROWS_AS(parse_complex(bad_header), ParseError);
  std::stringstream empty("");
  CHECK_THROWS_AS(parse_complex(empty), ParseError);
  std::stringstream wrong_arity("4 1\n1 2 3\n");
  CHECK_THROWS_AS(parse_complex(wrong_arity), ParseError);
}
