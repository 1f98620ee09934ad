#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace rclab {

// Seed for every randomized procedure in the library. Equal seed plus equal
// parameters gives a bit-identical result.
struct RngSeed {
  std::uint64_t value = 0;
};

namespace detail {

// splitmix64 finalizer.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

// Deterministic child seed: folds each path element into the master seed.
// Experiments key their streams as (master, stream tag, trial index), so
// results are independent of execution order.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = detail::mix64(master);
  for (std::uint64_t part : path) h = detail::mix64(h ^ detail::mix64(part));
  return h;
}

inline RngSeed derive(RngSeed master, std::initializer_list<std::uint64_t> path) {
  return RngSeed{derive_seed(master.value, path)};
}

// mt19937_64 wrapper producing uniforms in [0, 1) from the top 53 bits.
// std::uniform_real_distribution is not pinned down by the standard, so the
// conversion is done by hand to keep streams identical everywhere.
class UnitRng {
 public:
  explicit UnitRng(std::uint64_t seed) : gen_(seed) {}
  explicit UnitRng(RngSeed seed) : gen_(seed.value) {}

  std::uint64_t next_u64() { return gen_(); }
  double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return next_unit() < p; }

  // Uniform in [0, bound). Modulo bias is negligible at desk-scale bounds.
  std::uint64_t next_below(std::uint64_t bound) {
    return bound ? gen_() % bound : 0;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace rclab
