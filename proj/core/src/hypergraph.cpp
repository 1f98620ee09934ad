#include "rclab/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rclab/errors.hpp"

namespace rclab {

namespace {

// Size of the intersection of two sorted vertex tuples.
int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

std::vector<std::vector<int>> member_tuples(const UniformFamily& f) {
  std::vector<std::vector<int>> out(f.members().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    unrank_into(f.members()[i], f.k(), f.n(), out[i]);
  return out;
}

}  // namespace

UniformFamily::UniformFamily(int n, int k, std::vector<SimplexRank> members)
    : n_(n), k_(k), members_(std::move(members)) {
  if (k_ < 1 || k_ > n_)
    throw PreconditionError("family: need 1 <= k <= n");
  const std::uint64_t space = binomial(n_, k_);
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw PreconditionError("family: duplicate member");
  if (!members_.empty() && members_.back() >= space)
    throw PreconditionError("family: member rank out of range");
}

bool UniformFamily::contains(SimplexRank r) const {
  return std::binary_search(members_.begin(), members_.end(), r);
}

std::int64_t exclusive_cover_count(const UniformFamily& f, SimplexRank sigma) {
  if (!f.contains(sigma))
    throw PreconditionError("exclusive_cover_count: sigma not a member");
  const int n = f.n();
  const int k = f.k();
  std::vector<int> verts;
  unrank_into(sigma, k, n, verts);
  std::int64_t count = 0;
  std::vector<int> other(k);
  for (int v = 1; v <= n; ++v) {
    if (std::binary_search(verts.begin(), verts.end(), v)) continue;
    // tau = sigma + {v}; the other k-subsets of tau are sigma with one
    // vertex swapped for v.
    bool exclusive = true;
    for (int drop = 0; drop < k && exclusive; ++drop) {
      int t = 0;
      bool placed = false;
      for (int i = 0; i < k; ++i) {
        if (i == drop) continue;
        if (!placed && v < verts[i]) {
          other[t++] = v;
          placed = true;
        }
        other[t++] = verts[i];
      }
      if (!placed) other[t++] = v;
      if (f.contains(rank_of_sorted(std::span<const int>(other.data(), k))))
        exclusive = false;
    }
    if (exclusive) ++count;
  }
  return count;
}

std::int64_t exclusive_cover_total(const UniformFamily& f) {
  std::int64_t total = 0;
  for (SimplexRank sigma : f.members()) total += exclusive_cover_count(f, sigma);
  return total;
}

std::vector<SimplexRank> dominated_members(const UniformFamily& f,
                                           std::span<const SimplexRank> s) {
  for (SimplexRank r : s)
    if (!f.contains(r))
      throw PreconditionError("dominated_members: s is not a subfamily");
  const auto tuples = member_tuples(f);
  std::vector<std::vector<int>> s_tuples(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    unrank_into(s[i], f.k(), f.n(), s_tuples[i]);
  std::vector<SimplexRank> out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (const auto& st : s_tuples) {
      if (intersection_size(tuples[i], st) == f.k() - 1) {
        out.push_back(f.members()[i]);
        break;
      }
    }
  }
  return out;
}

bool is_connected_family(const UniformFamily& f) {
  const std::size_t m = f.members().size();
  if (m <= 1) return true;
  const auto tuples = member_tuples(f);
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (intersection_size(tuples[i], tuples[j]) == f.k() - 1)
        parent[find(i)] = find(j);
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < m; ++i)
    if (find(i) != root) return false;
  return true;
}

std::vector<SimplexRank> sample_partial_dominating_set(
    const UniformFamily& f, double epsilon, RngSeed seed,
    bool enforce_preconditions) {
  if (enforce_preconditions) {
    if (!(epsilon > 0.0 && epsilon <= 0.5))
      throw PreconditionError("domination: epsilon must lie in (0, 1/2]");
    if (!(f.n() > 2.0 * std::log(1.0 / epsilon) + f.k()))
      throw PreconditionError("domination: n must exceed 2 log(1/eps) + k");
  }
  const double c = 2.0 * std::log(1.0 / epsilon);
  const int span = f.n() - f.k();
  const double p = span > 0 ? std::min(1.0, c / span) : 1.0;
  UnitRng rng(seed);
  std::vector<SimplexRank> out;
  for (SimplexRank r : f.members())
    if (rng.next_unit() < p) out.push_back(r);
  return out;
}

double partial_domination_size_bound(int n, int k, std::int64_t m,
                                     double epsilon, double theta) {
  return 20.0 * std::log(1.0 / epsilon) * static_cast<double>(m) / (n - k) +
         2.0 * std::log(1.0 / (epsilon * theta));
}

DominationOutcome find_partial_dominating_set(const UniformFamily& f,
                                              double epsilon, double theta,
                                              RngSeed seed, int max_retries) {
  if (!(epsilon > 0.0 && epsilon <= 0.5))
    throw PreconditionError("domination: epsilon must lie in (0, 1/2]");
  if (!(theta > 0.0 && theta <= 1.0))
    throw PreconditionError("domination: theta must lie in (0, 1]");
  if (!(f.n() > 2.0 * std::log(1.0 / epsilon) + f.k()))
    throw PreconditionError("domination: n must exceed 2 log(1/eps) + k");
  const auto m = f.size();
  const double cover = static_cast<double>(exclusive_cover_total(f));
  if (cover > (1.0 - theta) * static_cast<double>(m) * (f.n() - f.k()))
    throw PreconditionError(
        "domination: exclusive-cover hypothesis fails for this theta");
  if (max_retries <= 0) {
    max_retries = static_cast<int>(
        std::ceil(50.0 / (epsilon * (1.0 - epsilon) * theta)));
  }
  const double needed = (1.0 - epsilon) * theta * static_cast<double>(m);
  const double size_bound =
      partial_domination_size_bound(f.n(), f.k(), m, epsilon, theta);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    const RngSeed attempt_seed{derive_seed(seed.value, {static_cast<std::uint64_t>(attempt)})};
    auto s = sample_partial_dominating_set(f, epsilon, attempt_seed);
    const auto dominated = dominated_members(f, s);
    if (static_cast<double>(dominated.size()) >= needed &&
        static_cast<double>(s.size()) <= size_bound) {
      DominationOutcome out;
      out.members = std::move(s);
      out.dominated_count = static_cast<std::int64_t>(dominated.size());
      out.retries = attempt;
      out.epsilon = epsilon;
      out.theta = theta;
      return out;
    }
  }
  throw RetriesExhaustedError("domination: no admissible subfamily within " +
                              std::to_string(max_retries) + " draws");
}

UniformFamily random_family(int n, int k, int m, RngSeed seed) {
  const std::uint64_t space = binomial(n, k);
  if (m < 0 || static_cast<std::uint64_t>(m) > space)
    throw PreconditionError("random_family: m exceeds the number of k-subsets");
  std::vector<SimplexRank> pool(space);
  std::iota(pool.begin(), pool.end(), 0);
  UnitRng rng(seed);
  for (int i = 0; i < m; ++i) {
    const std::uint64_t j =
        i + rng.next_below(space - static_cast<std::uint64_t>(i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  return UniformFamily(n, k, std::move(pool));
}

}  // namespace rclab
