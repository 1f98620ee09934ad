#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace rclab {

// Dense matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<mpz_class> data_;
};

// Invariant factors s_1 | s_2 | ... | s_rho, all positive; the zero matrix
// has none. The product of the first j equals the gcd of the j x j minors.
struct SnfResult {
  std::vector<mpz_class> invariant_factors;
  std::size_t rank() const { return invariant_factors.size(); }
};

SnfResult smith_normal_form(IntMatrix m);

// Rank over the field with p elements. p must be prime.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

// Elimination core on entries already reduced into [0, p). Consumes the
// buffer. Shared by the cohomology fast path.
std::size_t rank_mod_p_dense(std::vector<std::uint64_t> entries,
                             std::size_t rows, std::size_t cols,
                             std::uint64_t p);

bool is_prime_u64(std::uint64_t p);

}  // namespace rclab
