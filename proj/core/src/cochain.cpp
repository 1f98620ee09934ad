#include "rclab/cochain.hpp"

#include <algorithm>

#include "rclab/errors.hpp"
#include "rclab/hypergraph.hpp"

namespace rclab {

Cochain::Cochain(FiniteAbelianGroup group, int n, int degree)
    : group_(std::move(group)), n_(n), degree_(degree) {
  if (n_ < 1) throw PreconditionError("cochain: n must be positive");
  if (degree_ < -1 || degree_ > n_ - 1)
    throw PreconditionError("cochain: degree out of range");
  values_.assign(binomial(n_, degree_ + 1), 0);
}

GroupCode Cochain::eval_ordered(std::span<const int> vertices) const {
  std::vector<int> sorted(vertices.begin(), vertices.end());
  // Parity of the sorting permutation via insertion-sort swap count; the
  // tuples here have at most a handful of entries.
  int swaps = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    int v = sorted[i];
    std::size_t j = i;
    while (j > 0 && sorted[j - 1] > v) {
      sorted[j] = sorted[j - 1];
      --j;
      ++swaps;
    }
    sorted[j] = v;
  }
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) return group_.zero();
  const GroupCode v = values_[rank_of_sorted(sorted)];
  return (swaps % 2 == 0) ? v : group_.neg(v);
}

bool Cochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](GroupCode v) { return v == 0; });
}

Cochain add(const Cochain& a, const Cochain& b) {
  if (a.group() != b.group() || a.n() != b.n() || a.degree() != b.degree())
    throw PreconditionError("cochain add: mismatched shapes");
  Cochain out(a.group(), a.n(), a.degree());
  for (SimplexRank r = 0; r < a.value_count(); ++r)
    out.set_value(r, a.group().add(a.value(r), b.value(r)));
  return out;
}

Cochain sub(const Cochain& a, const Cochain& b) {
  if (a.group() != b.group() || a.n() != b.n() || a.degree() != b.degree())
    throw PreconditionError("cochain sub: mismatched shapes");
  Cochain out(a.group(), a.n(), a.degree());
  for (SimplexRank r = 0; r < a.value_count(); ++r)
    out.set_value(r, a.group().sub(a.value(r), b.value(r)));
  return out;
}

Cochain coboundary(const Cochain& phi) {
  const int n = phi.n();
  const int d = phi.degree();
  if (d + 1 > n - 1)
    throw PreconditionError("coboundary: output degree exceeds n-1");
  const FiniteAbelianGroup& g = phi.group();
  Cochain out(g, n, d + 1);
  const std::uint64_t count = out.value_count();
  std::vector<int> verts, facet(std::max(d + 1, 0));
  for (std::uint64_t r = 0; r < count; ++r) {
    unrank_into(r, d + 2, n, verts);
    GroupCode acc = g.zero();
    for (int i = 0; i <= d + 1; ++i) {
      int t = 0;
      for (int j = 0; j <= d + 1; ++j)
        if (j != i) facet[t++] = verts[j];
      const GroupCode v = phi.value(rank_of_sorted(
          std::span<const int>(facet.data(), static_cast<std::size_t>(d + 1))));
      acc = g.add(acc, (i % 2 == 0) ? v : g.neg(v));
    }
    out.set_value(r, acc);
  }
  return out;
}

std::vector<SimplexRank> support(const Cochain& phi) {
  std::vector<SimplexRank> out;
  for (SimplexRank r = 0; r < phi.value_count(); ++r)
    if (phi.value(r) != 0) out.push_back(r);
  return out;
}

std::uint64_t support_size(const Cochain& phi) {
  std::uint64_t c = 0;
  for (SimplexRank r = 0; r < phi.value_count(); ++r)
    if (phi.value(r) != 0) ++c;
  return c;
}

std::int64_t coboundary_support_size(const Cochain& phi) {
  return static_cast<std::int64_t>(support_size(coboundary(phi)));
}

std::uint64_t weight_bruteforce(const Cochain& phi, std::uint64_t cap) {
  const int n = phi.n();
  const int d = phi.degree();
  if (d < 0)
    throw PreconditionError("weight: defined for degree >= 0 cochains");
  const FiniteAbelianGroup& g = phi.group();
  const std::uint64_t r = g.order();
  const std::uint64_t psi_coords = binomial(n, d);  // simplices one degree down

  // r^psi_coords candidate perturbations, enumerated by odometer.
  std::uint64_t states = 1;
  for (std::uint64_t i = 0; i < psi_coords; ++i) {
    if (states > cap / r)
      throw CapExceededError("weight: psi search space exceeds cap");
    states *= r;
  }

  Cochain psi(g, n, d - 1);
  std::uint64_t best = support_size(phi);
  while (true) {
    // Advance the odometer; the all-zero psi was counted via the initial
    // best (phi + d0 = phi).
    std::int64_t pos = static_cast<std::int64_t>(psi_coords) - 1;
    while (pos >= 0) {
      const GroupCode v = psi.value(pos) + 1;
      if (v < r) {
        psi.set_value(pos, v);
        break;
      }
      psi.set_value(pos, 0);
      --pos;
    }
    if (pos < 0) break;
    const Cochain shifted = add(phi, coboundary(psi));
    best = std::min(best, support_size(shifted));
    if (best == 0) break;
  }
  return best;
}

Cochain contraction(const Cochain& phi, int u) {
  const int n = phi.n();
  const int d = phi.degree();
  if (d < 0) throw PreconditionError("contraction: needs degree >= 0");
  if (u < 1 || u > n) throw PreconditionError("contraction: vertex out of range");
  const FiniteAbelianGroup& g = phi.group();
  Cochain out(g, n, d - 1);
  std::vector<int> verts, merged(d + 1);
  for (std::uint64_t r = 0; r < out.value_count(); ++r) {
    unrank_into(r, d, n, verts);
    bool contains_u = false;
    int pos = 0;
    for (int v : verts) {
      if (v == u) contains_u = true;
      if (v < u) ++pos;
    }
    if (contains_u) continue;  // stays zero
    // Prepending u and resorting moves it past `pos` smaller vertices.
    int t = 0;
    for (int v : verts) {
      if (t == pos) merged[t++] = u;
      merged[t++] = v;
    }
    if (t == pos) merged[t++] = u;
    const GroupCode v = phi.value(rank_of_sorted(merged));
    out.set_value(r, (pos % 2 == 0) ? v : g.neg(v));
  }
  return out;
}

Cochain balanced_partition_cochain(const FiniteAbelianGroup& group, int n,
                                   int k) {
  if (k < 1 || k > n - 1)
    throw PreconditionError("partition cochain: need 1 <= k <= n-1");
  if (n % (k + 1) != 0)
    throw PreconditionError("partition cochain: k+1 must divide n");
  const int block = n / (k + 1);
  Cochain out(group, n, k - 1);
  std::vector<int> verts;
  for (std::uint64_t r = 0; r < out.value_count(); ++r) {
    unrank_into(r, k, n, verts);
    bool supported = true;
    for (int i = 0; i < k; ++i) {
      if ((verts[i] - 1) / block != i) {
        supported = false;
        break;
      }
    }
    if (supported) out.set_value(r, group.generator());
  }
  return out;
}

bool is_connected_support(const Cochain& phi) {
  if (phi.degree() < 0) return true;
  UniformFamily family(phi.n(), phi.degree() + 1, support(phi));
  return is_connected_family(family);
}

bool is_weight_minimal_connected(const Cochain& phi, std::uint64_t cap) {
  if (phi.is_zero()) return false;
  if (!is_connected_support(phi)) return false;
  return weight_bruteforce(phi, cap) == support_size(phi);
}

Cochain random_cochain(const FiniteAbelianGroup& group, int n, int degree,
                       UnitRng& rng) {
  Cochain out(group, n, degree);
  for (SimplexRank r = 0; r < out.value_count(); ++r)
    out.set_value(r, static_cast<GroupCode>(rng.next_below(group.order())));
  return out;
}

}  // namespace rclab
