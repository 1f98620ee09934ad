#include "rclab/int_matrix.hpp"

#include <algorithm>
#include <utility>

#include "rclab/errors.hpp"

namespace rclab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] -= q * row[b] on columns >= from.
void row_axpy(IntMatrix& m, std::size_t a, std::size_t b, const mpz_class& q,
              std::size_t from) {
  if (q == 0) return;
  for (std::size_t j = from; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_axpy(IntMatrix& m, std::size_t a, std::size_t b, const mpz_class& q,
              std::size_t from) {
  if (q == 0) return;
  for (std::size_t i = from; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

// Smallest-magnitude nonzero entry of the trailing submatrix, if any.
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = t; i < m.rows(); ++i) {
    for (std::size_t j = t; j < m.cols(); ++j) {
      const mpz_class& v = m.at(i, j);
      if (v == 0) continue;
      mpz_class a = abs(v);
      if (!found || a < best) {
        found = true;
        best = std::move(a);
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SnfResult smith_normal_form(IntMatrix m) {
  const std::size_t bound = std::min(m.rows(), m.cols());
  std::vector<mpz_class> diag;

  for (std::size_t t = 0; t < bound; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(m, t, pi, pj)) break;
    swap_rows(m, t, pi);
    swap_cols(m, t, pj);

    // Clear row and column t. Quotient steps shrink remainders, so picking
    // small pivots keeps the entries from blowing up.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m.at(i, t) == 0) continue;
        mpz_class q = m.at(i, t) / m.at(t, t);
        row_axpy(m, i, t, q, t);
        if (m.at(i, t) != 0) {
          swap_rows(m, t, i);  // strictly smaller remainder becomes the pivot
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m.at(t, j) == 0) continue;
        mpz_class q = m.at(t, j) / m.at(t, t);
        col_axpy(m, j, t, q, t);
        if (m.at(t, j) != 0) {
          swap_cols(m, t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot must divide the rest of the submatrix; fold a bad row in and
      // keep reducing.
      for (std::size_t i = t + 1; i < m.rows() && !dirty; ++i) {
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (std::size_t jj = t; jj < m.cols(); ++jj)
              m.at(t, jj) += m.at(i, jj);
            dirty = true;
            break;
          }
        }
      }
    }
    diag.push_back(abs(m.at(t, t)));
  }

  // The in-place reduction already enforces the divisibility chain, but a
  // gcd/lcm sweep is cheap and makes the invariant unconditional.
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] != 0) {
        mpz_class g, l;
        mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
        l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
  }
  return SnfResult{std::move(diag)};
}

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::size_t rank_mod_p_dense(std::vector<std::uint64_t> entries,
                             std::size_t rows, std::size_t cols,
                             std::uint64_t p) {
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& {
    return entries[i * cols + j];
  };
  auto pow_mod = [&](std::uint64_t base, std::uint64_t exp) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
      if (exp & 1) acc = acc * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return acc;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = col; j < cols; ++j)
        std::swap(at(pivot, j), at(rank, j));
    const std::uint64_t inv = pow_mod(at(rank, col), p - 2);
    for (std::size_t j = col; j < cols; ++j) at(rank, j) = at(rank, j) * inv % p;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t f = at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j)
        at(i, j) = (at(i, j) + (p - f) * at(rank, j)) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  if (!is_prime_u64(p))
    throw PreconditionError("rank_mod_p: modulus must be prime");
  std::vector<std::uint64_t> entries(m.rows() * m.cols());
  mpz_class tmp;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_mod_ui(tmp.get_mpz_t(), m.at(i, j).get_mpz_t(), p);
      entries[i * m.cols() + j] = tmp.get_ui();
    }
  }
  return rank_mod_p_dense(std::move(entries), m.rows(), m.cols(), p);
}

}  // namespace rclab
