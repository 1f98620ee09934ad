#include "rclab/cohomology.hpp"

#include <algorithm>
#include <cstring>
#include <ostream>
#include <unordered_set>

#include "rclab/errors.hpp"

namespace rclab {

namespace {

// Facet ranks and alternating signs of one k-face.
struct FaceIncidence {
  std::vector<SimplexRank> facets;
  std::vector<int> signs;
};

FaceIncidence face_incidence(int n, int k, SimplexRank face) {
  FaceIncidence out;
  out.facets.reserve(k + 1);
  out.signs.reserve(k + 1);
  std::vector<int> verts, facet(k);
  unrank_into(face, k + 1, n, verts);
  int sign = 1;
  for (int i = 0; i <= k; ++i) {
    int t = 0;
    for (int j = 0; j <= k; ++j)
      if (j != i) facet[t++] = verts[j];
    out.facets.push_back(rank_of_sorted(facet));
    out.signs.push_back(sign);
    sign = -sign;
  }
  return out;
}

// Rows of the degree-(k-1) matrix reduced mod p, flattened dense.
std::vector<std::uint64_t> upper_matrix_mod_p(const Complex& y,
                                              std::uint64_t p) {
  const std::uint64_t cols = binomial(y.n(), y.k());
  std::vector<std::uint64_t> entries(y.face_count() * cols, 0);
  std::size_t row = 0;
  for (SimplexRank face : y.k_faces()) {
    const auto inc = face_incidence(y.n(), y.k(), face);
    for (std::size_t i = 0; i < inc.facets.size(); ++i)
      entries[row * cols + inc.facets[i]] = inc.signs[i] > 0 ? 1 : p - 1;
    ++row;
  }
  return entries;
}

// Degree-(k-2) matrix mod p: all (k-1)-simplices by all (k-2)-simplices;
// the augmentation column for k = 1.
std::vector<std::uint64_t> lower_matrix_mod_p(int n, int k, std::uint64_t p,
                                              std::size_t& rows_out,
                                              std::size_t& cols_out) {
  if (k == 1) {
    rows_out = static_cast<std::size_t>(n);
    cols_out = 1;
    return std::vector<std::uint64_t>(rows_out, 1 % p);
  }
  const std::uint64_t rows = binomial(n, k);
  const std::uint64_t cols = binomial(n, k - 1);
  rows_out = rows;
  cols_out = cols;
  std::vector<std::uint64_t> entries(rows * cols, 0);
  for (std::uint64_t r = 0; r < rows; ++r) {
    const auto inc = face_incidence(n, k - 1, r);
    for (std::size_t i = 0; i < inc.facets.size(); ++i)
      entries[r * cols + inc.facets[i]] = inc.signs[i] > 0 ? 1 : p - 1;
  }
  return entries;
}

// GF(2) rank with bit-packed rows; the hot path of threshold sweeps.
std::size_t rank_gf2_bitrows(std::vector<std::uint64_t> rows,
                             std::size_t row_count, std::size_t words,
                             std::size_t cols) {
  std::vector<const std::uint64_t*> pivots(cols, nullptr);
  std::size_t rank = 0;
  for (std::size_t r = 0; r < row_count && rank < cols; ++r) {
    std::uint64_t* row = rows.data() + r * words;
    for (std::size_t w = 0; w < words; ++w) {
      while (row[w]) {
        const std::size_t col = (w << 6) + static_cast<std::size_t>(
                                    __builtin_ctzll(row[w]));
        const std::uint64_t* piv = pivots[col];
        if (piv == nullptr) {
          pivots[col] = row;
          ++rank;
          goto next_row;
        }
        for (std::size_t x = w; x < words; ++x) row[x] ^= piv[x];
      }
    }
  next_row:;
  }
  return rank;
}

std::size_t upper_rank_gf2(const Complex& y) {
  const std::size_t cols = binomial(y.n(), y.k());
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::uint64_t> rows(y.face_count() * words, 0);
  std::size_t r = 0;
  for (SimplexRank face : y.k_faces()) {
    const auto inc = face_incidence(y.n(), y.k(), face);
    for (SimplexRank facet : inc.facets)
      rows[r * words + (facet >> 6)] ^= std::uint64_t{1} << (facet & 63);
    ++r;
  }
  return rank_gf2_bitrows(std::move(rows), y.face_count(), words, cols);
}

// |ker(M mod m)| for an integer matrix with SNF factors s and given column
// count: m^(cols - rank) * prod gcd(s_i, m).
mpz_class kernel_size_mod_m(const SnfResult& snf, std::size_t cols,
                            std::uint64_t m) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), m, cols - snf.rank());
  mpz_class mm = static_cast<unsigned long>(m);
  for (const mpz_class& s : snf.invariant_factors) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), mm.get_mpz_t());
    out *= g;
  }
  return out;
}

// |Im(M mod m)| = prod m / gcd(s_i, m).
mpz_class image_size_mod_m(const SnfResult& snf, std::uint64_t m) {
  mpz_class out = 1;
  mpz_class mm = static_cast<unsigned long>(m);
  for (const mpz_class& s : snf.invariant_factors) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), mm.get_mpz_t());
    out *= mm / g;
  }
  return out;
}

mpz_class order_from_snf(const SnfResult& upper, const SnfResult& lower,
                         std::size_t cocycle_cols, std::uint64_t m) {
  const mpz_class cocycles = kernel_size_mod_m(upper, cocycle_cols, m);
  const mpz_class coboundaries = image_size_mod_m(lower, m);
  return cocycles / coboundaries;
}

}  // namespace

IntMatrix coboundary_matrix(const Complex& y, int degree) {
  const int n = y.n();
  const int k = y.k();
  if (degree == k - 1) {
    const std::uint64_t cols = binomial(n, k);
    IntMatrix m(y.face_count(), cols);
    std::size_t row = 0;
    for (SimplexRank face : y.k_faces()) {
      const auto inc = face_incidence(n, k, face);
      for (std::size_t i = 0; i < inc.facets.size(); ++i)
        m.at(row, inc.facets[i]) = inc.signs[i];
      ++row;
    }
    return m;
  }
  if (degree == k - 2) {
    if (k == 1) {
      IntMatrix m(static_cast<std::size_t>(n), 1);
      for (int i = 0; i < n; ++i) m.at(i, 0) = 1;
      return m;
    }
    const std::uint64_t rows = binomial(n, k);
    const std::uint64_t cols = binomial(n, k - 1);
    IntMatrix m(rows, cols);
    for (std::uint64_t r = 0; r < rows; ++r) {
      const auto inc = face_incidence(n, k - 1, r);
      for (std::size_t i = 0; i < inc.facets.size(); ++i)
        m.at(r, inc.facets[i]) = inc.signs[i];
    }
    return m;
  }
  throw PreconditionError("coboundary_matrix: degree must be k-1 or k-2");
}

mpz_class cohomology_order(const Complex& y, std::uint64_t m) {
  if (m < 2) throw PreconditionError("cohomology_order: m must be >= 2");
  const SnfResult upper = smith_normal_form(coboundary_matrix(y, y.k() - 1));
  const SnfResult lower = smith_normal_form(coboundary_matrix(y, y.k() - 2));
  return order_from_snf(upper, lower, binomial(y.n(), y.k()), m);
}

mpz_class brute_force_cohomology_order(const Complex& y, std::uint64_t m,
                                       std::uint64_t cap) {
  if (m < 2) throw PreconditionError("brute force: m must be >= 2");
  if (m > 255) throw PreconditionError("brute force: m too large");
  const int n = y.n();
  const int k = y.k();
  const std::uint64_t cols = binomial(n, k);

  // Coordinates appearing in no present face are unconstrained and each
  // multiplies the cocycle count by m; the search runs over the rest.
  std::vector<std::int64_t> coord_pos(cols, -1);
  std::vector<FaceIncidence> faces;
  faces.reserve(y.face_count());
  for (SimplexRank face : y.k_faces())
    faces.push_back(face_incidence(n, k, face));
  std::int64_t active = 0;
  for (const auto& f : faces)
    for (SimplexRank facet : f.facets)
      if (coord_pos[facet] < 0) coord_pos[facet] = active++;
  const std::uint64_t free_coords = cols - static_cast<std::uint64_t>(active);

  std::uint64_t states = 1;
  for (std::int64_t i = 0; i < active; ++i) {
    if (states > cap / m)
      throw CapExceededError("brute force: cocycle space exceeds cap");
    states *= m;
  }

  // Faces become checkable once their last coordinate is assigned.
  std::vector<std::vector<std::size_t>> complete_at(active);
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    std::int64_t depth = -1;
    for (SimplexRank facet : faces[fi].facets)
      depth = std::max(depth, coord_pos[facet]);
    if (depth >= 0) complete_at[depth].push_back(fi);
  }

  // Exhaustive depth-first count of assignments keeping every present face
  // at zero; a violated face can never recover, so pruning loses nothing.
  std::vector<std::uint64_t> assign(active, 0);
  std::uint64_t leaves = 0;
  std::int64_t depth = 0;
  auto face_ok = [&](std::size_t fi) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < faces[fi].facets.size(); ++i) {
      const std::uint64_t v = assign[coord_pos[faces[fi].facets[i]]];
      sum += faces[fi].signs[i] > 0 ? v : (v ? m - v : 0);
    }
    return sum % m == 0;
  };
  if (active == 0) {
    leaves = 1;
  } else {
    while (depth >= 0) {
      bool ok = true;
      for (std::size_t fi : complete_at[depth])
        if (!face_ok(fi)) {
          ok = false;
          break;
        }
      if (ok && depth + 1 == active) ++leaves;
      if (ok && depth + 1 < active) {
        ++depth;
        continue;
      }
      // Backtrack to the next unexplored value.
      while (depth >= 0) {
        if (++assign[depth] < m) break;
        assign[depth] = 0;
        --depth;
      }
    }
  }

  mpz_class cocycles;
  mpz_ui_pow_ui(cocycles.get_mpz_t(), m, free_coords);
  cocycles *= static_cast<unsigned long>(leaves);

  // Coboundary count by direct image enumeration. For k = 1 the augmented
  // sources are the m constants, all with distinct images.
  mpz_class coboundaries;
  if (k == 1) {
    coboundaries = static_cast<unsigned long>(m);
  } else {
    const std::uint64_t src = binomial(n, k - 1);
    std::uint64_t images = 1;
    for (std::uint64_t i = 0; i < src; ++i) {
      if (images > cap / m)
        throw CapExceededError("brute force: coboundary space exceeds cap");
      images *= m;
    }
    std::vector<FaceIncidence> targets;
    targets.reserve(cols);
    for (std::uint64_t r = 0; r < cols; ++r)
      targets.push_back(face_incidence(n, k - 1, r));
    std::vector<std::uint64_t> psi(src, 0);
    std::unordered_set<std::string> image_set;
    std::string key(cols, '\0');
    while (true) {
      for (std::uint64_t r = 0; r < cols; ++r) {
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < targets[r].facets.size(); ++i) {
          const std::uint64_t v = psi[targets[r].facets[i]];
          sum += targets[r].signs[i] > 0 ? v : (v ? m - v : 0);
        }
        key[r] = static_cast<char>(sum % m);
      }
      image_set.insert(key);
      std::int64_t pos = static_cast<std::int64_t>(src) - 1;
      while (pos >= 0) {
        if (++psi[pos] < m) break;
        psi[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    coboundaries = static_cast<unsigned long>(image_set.size());
  }
  return cocycles / coboundaries;
}

VanishingTester::VanishingTester(int n, int k, FiniteAbelianGroup group)
    : n_(n), k_(k), group_(std::move(group)) {
  if (k_ < 1 || k_ > n_ - 1)
    throw PreconditionError("vanishing tester: need 1 <= k <= n-1");
  primes_ = group_.prime_divisors();
  cocycle_target_ = binomial(n_, k_);
  for (std::uint32_t p : primes_) {
    std::size_t rows = 0, cols = 0;
    auto entries = lower_matrix_mod_p(n_, k_, p, rows, cols);
    lower_rank_.push_back(rank_mod_p_dense(std::move(entries), rows, cols, p));
  }
}

bool VanishingTester::vanishes(const Complex& y) const {
  if (y.n() != n_ || y.k() != k_)
    throw PreconditionError("vanishing tester: complex has wrong parameters");
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const std::uint32_t p = primes_[i];
    std::size_t upper_rank;
    if (p == 2) {
      upper_rank = upper_rank_gf2(y);
    } else {
      auto entries = upper_matrix_mod_p(y, p);
      upper_rank = rank_mod_p_dense(std::move(entries), y.face_count(),
                                    cocycle_target_, p);
    }
    if (upper_rank + lower_rank_[i] != cocycle_target_) return false;
  }
  return true;
}

bool vanishes(const Complex& y, const FiniteAbelianGroup& group) {
  return VanishingTester(y.n(), y.k(), group).vanishes(y);
}

CohomologyReport analyze_cohomology(const Complex& y,
                                    const FiniteAbelianGroup& group) {
  CohomologyReport report;
  report.n = y.n();
  report.k = y.k();
  report.group = group.name();
  const SnfResult upper = smith_normal_form(coboundary_matrix(y, y.k() - 1));
  const SnfResult lower = smith_normal_form(coboundary_matrix(y, y.k() - 2));
  std::vector<std::uint64_t> orders(group.factors().begin(),
                                    group.factors().end());
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  report.vanishes = true;
  for (std::uint64_t m : orders) {
    mpz_class order = order_from_snf(upper, lower, binomial(y.n(), y.k()), m);
    if (order != 1) report.vanishes = false;
    report.order_mod.emplace_back(m, std::move(order));
  }
  return report;
}

void write_report_csv(const CohomologyReport& report, std::ostream& out) {
  out << "n,k,group,vanishes,order_mod\n";
  out << report.n << ',' << report.k << ',' << report.group << ','
      << (report.vanishes ? 1 : 0) << ',';
  for (std::size_t i = 0; i < report.order_mod.size(); ++i) {
    if (i) out << ';';
    out << report.order_mod[i].first << ':'
        << report.order_mod[i].second.get_str();
  }
  out << '\n';
}

}  // namespace rclab
