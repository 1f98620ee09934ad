#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rclab {

// Element of a finite abelian group, encoded in mixed radix over the cyclic
// factors with the first factor least significant. Code 0 is the identity.
using GroupCode = std::uint32_t;

// R = Z_{m_1} x ... x Z_{m_t}, every m_j >= 2. Order r = prod m_j.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<std::uint32_t> factors);

  // Spec strings: "Z2", "Z6", "Z2xZ4".
  static FiniteAbelianGroup parse(std::string_view spec);
  std::string name() const;

  std::uint32_t order() const { return order_; }
  const std::vector<std::uint32_t>& factors() const { return factors_; }

  GroupCode zero() const { return 0; }
  // Generator of the first cyclic factor; the canonical "1".
  GroupCode generator() const { return 1; }

  GroupCode add(GroupCode a, GroupCode b) const;
  GroupCode neg(GroupCode a) const;
  GroupCode sub(GroupCode a, GroupCode b) const { return add(a, neg(b)); }
  GroupCode apply_sign(GroupCode a, int sign) const {
    return sign >= 0 ? a : neg(a);
  }

  std::vector<std::uint32_t> residues(GroupCode a) const;
  GroupCode from_residues(const std::vector<std::uint32_t>& residues) const;

  // Distinct primes dividing the order, ascending.
  std::vector<std::uint32_t> prime_divisors() const;

  friend bool operator==(const FiniteAbelianGroup&,
                         const FiniteAbelianGroup&) = default;

 private:
  std::vector<std::uint32_t> factors_;
  std::uint32_t order_ = 1;
};

}  // namespace rclab
