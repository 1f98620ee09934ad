#include <benchmark/benchmark.h>

#include "rclab/cochain.hpp"
#include "rclab/cohomology.hpp"
#include "rclab/complex.hpp"

namespace {

void BM_RankUnrankRoundTrip(benchmark::State& state) {
  const int n = 40, dim = 3;
  const std::uint64_t count = rclab::binomial(n, dim + 1);
  std::vector<int> verts;
  std::uint64_t r = 0;
  for (auto _ : state) {
    rclab::unrank_into(r, dim + 1, n, verts);
    benchmark::DoNotOptimize(rclab::rank_of_sorted(verts));
    r = (r + 7919) % count;
  }
}
BENCHMARK(BM_RankUnrankRoundTrip);

void BM_SampleComplex(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rclab::sample_complex(30, 2, 0.3, rclab::RngSeed{seed++}));
  }
}
BENCHMARK(BM_SampleComplex);

void BM_VanishingTest(benchmark::State& state) {
  const rclab::FiniteAbelianGroup z2{{2}};
  const rclab::VanishingTester tester(25, 2, z2);
  std::uint64_t seed = 1;
  std::vector<rclab::Complex> pool;
  for (int i = 0; i < 16; ++i)
    pool.push_back(rclab::sample_complex(25, 2, 0.28, rclab::RngSeed{seed++}));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tester.vanishes(pool[i]));
    i = (i + 1) % pool.size();
  }
}
BENCHMARK(BM_VanishingTest);

void BM_SmithNormalForm(benchmark::State& state) {
  const rclab::Complex y = rclab::sample_complex(9, 2, 0.5, rclab::RngSeed{5});
  const rclab::IntMatrix m = rclab::coboundary_matrix(y, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rclab::smith_normal_form(m));
  }
}
BENCHMARK(BM_SmithNormalForm);

void BM_BruteForceOrder(benchmark::State& state) {
  const rclab::Complex y = rclab::sample_complex(5, 2, 0.5, rclab::RngSeed{3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rclab::brute_force_cohomology_order(y, 6, std::uint64_t{1} << 27));
  }
}
BENCHMARK(BM_BruteForceOrder);

void BM_WeightBruteForce(benchmark::State& state) {
  const rclab::FiniteAbelianGroup z3{{3}};
  const rclab::Cochain phi = rclab::balanced_partition_cochain(z3, 6, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rclab::weight_bruteforce(phi));
  }
}
BENCHMARK(BM_WeightBruteForce);

}  // namespace
