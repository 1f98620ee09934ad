#include "rclab/group.hpp"

#include <charconv>

#include "rclab/errors.hpp"

namespace rclab {

namespace {
constexpr std::uint64_t kMaxOrder = 1u << 20;  // desk scale
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint32_t> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty())
    throw PreconditionError("group: at least one cyclic factor required");
  std::uint64_t order = 1;
  for (std::uint32_t m : factors_) {
    if (m < 2) throw PreconditionError("group: every factor must be >= 2");
    order *= m;
    if (order > kMaxOrder)
      throw PreconditionError("group: order exceeds supported range");
  }
  order_ = static_cast<std::uint32_t>(order);
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view spec) {
  std::vector<std::uint32_t> factors;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    if (spec[pos] != 'Z' && spec[pos] != 'z')
      throw ParseError("group spec: expected 'Z' in \"" + std::string(spec) +
                       "\"");
    ++pos;
    std::uint32_t value = 0;
    const char* begin = spec.data() + pos;
    const char* end = spec.data() + spec.size();
    auto [next, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || next == begin)
      throw ParseError("group spec: expected a factor order after 'Z'");
    pos = static_cast<std::size_t>(next - spec.data());
    factors.push_back(value);
    if (pos == spec.size()) break;
    if (spec[pos] != 'x' && spec[pos] != 'X')
      throw ParseError("group spec: factors must be joined by 'x'");
    ++pos;
    if (pos == spec.size())
      throw ParseError("group spec: trailing 'x'");
  }
  if (factors.empty()) throw ParseError("group spec: empty");
  try {
    return FiniteAbelianGroup(std::move(factors));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string FiniteAbelianGroup::name() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += 'Z';
    out += std::to_string(factors_[i]);
  }
  return out;
}

GroupCode FiniteAbelianGroup::add(GroupCode a, GroupCode b) const {
  GroupCode out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t m : factors_) {
    const std::uint32_t s = (a % m + b % m) % m;
    out += s * place;
    a /= m;
    b /= m;
    place *= m;
  }
  return out;
}

GroupCode FiniteAbelianGroup::neg(GroupCode a) const {
  GroupCode out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t m : factors_) {
    const std::uint32_t r = a % m;
    out += (r == 0 ? 0 : m - r) * place;
    a /= m;
    place *= m;
  }
  return out;
}

std::vector<std::uint32_t> FiniteAbelianGroup::residues(GroupCode a) const {
  std::vector<std::uint32_t> out;
  out.reserve(factors_.size());
  for (std::uint32_t m : factors_) {
    out.push_back(a % m);
    a /= m;
  }
  return out;
}

GroupCode FiniteAbelianGroup::from_residues(
    const std::vector<std::uint32_t>& residues) const {
  if (residues.size() != factors_.size())
    throw PreconditionError("group: residue tuple has wrong length");
  GroupCode out = 0;
  std::uint32_t place = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (residues[i] >= factors_[i])
      throw PreconditionError("group: residue out of range");
    out += residues[i] * place;
    place *= factors_[i];
  }
  return out;
}

std::vector<std::uint32_t> FiniteAbelianGroup::prime_divisors() const {
  std::vector<std::uint32_t> primes;
  std::uint32_t r = order_;
  for (std::uint32_t p = 2; p * p <= r; ++p) {
    if (r % p == 0) {
      primes.push_back(p);
      while (r % p == 0) r /= p;
    }
  }
  if (r > 1) primes.push_back(r);
  return primes;
}

}  // namespace rclab
