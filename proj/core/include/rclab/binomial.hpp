#pragma once

#include <array>
#include <cstdint>
#include <limits>

#include "rclab/errors.hpp"

namespace rclab {

// Largest n for which binomial coefficients are tabulated. Everything in
// this library runs at desk scale (n <= 60 or so); the table is generated
// at compile time.
inline constexpr int kMaxBinomialN = 70;

namespace detail {

inline constexpr std::uint64_t kBinomialSaturated =
    std::numeric_limits<std::uint64_t>::max();

consteval auto make_binomial_table() {
  std::array<std::array<std::uint64_t, kMaxBinomialN + 1>, kMaxBinomialN + 1>
      t{};
  for (int n = 0; n <= kMaxBinomialN; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) {
      const std::uint64_t a = t[n - 1][k - 1];
      const std::uint64_t b = (k <= n - 1) ? t[n - 1][k] : 0;
      if (a == kBinomialSaturated || b == kBinomialSaturated ||
          a + b < a) {
        t[n][k] = kBinomialSaturated;
      } else {
        t[n][k] = a + b;
      }
    }
  }
  return t;
}

inline constexpr auto kBinomialTable = make_binomial_table();

}  // namespace detail

// n choose k; 0 when k < 0 or k > n. Throws when n exceeds the table or the
// value does not fit in 64 bits.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n > kMaxBinomialN)
    throw PreconditionError("binomial: n exceeds supported range");
  const std::uint64_t v = detail::kBinomialTable[n][k];
  if (v == detail::kBinomialSaturated)
    throw PreconditionError("binomial: value overflows 64 bits");
  return v;
}

}  // namespace rclab
