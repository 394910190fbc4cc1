#include "abelsnf/abelian_group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace abelsnf {

AbelianGroupStructure AbelianGroupStructure::from_diagonal(std::span<const BigInt> diagonal) {
  std::vector<BigInt> nontrivial;
  std::uint64_t zeros = 0;
  for (const auto& d : diagonal) {
    if (d == 0) {
      ++zeros;
    } else if (abs(d) != 1) {
      nontrivial.push_back(abs(d));
    }
  }
  return from_cyclic_factors(nontrivial, zeros);
}

AbelianGroupStructure AbelianGroupStructure::from_cyclic_factors(std::span<const BigInt> orders,
                                                                 std::uint64_t free_rank) {
  std::vector<BigInt> sorted;
  for (const auto& raw : orders) {
    if (abs(raw) > 1) sorted.push_back(abs(raw));
  }
  std::sort(sorted.begin(), sorted.end());
  bool chain = true;
  for (std::size_t i = 1; i < sorted.size() && chain; ++i) chain = sorted[i] % sorted[i - 1] == 0;
  if (chain) {
    AbelianGroupStructure g;
    g.invariant_factors_ = std::move(sorted);
    g.free_rank_ = free_rank;
    return g;
  }
  // Split every order into prime powers, then rebuild the chain: the j-th
  // largest invariant factor is the product over primes of the j-th largest
  // power of that prime.
  std::map<BigInt, std::vector<BigInt>> by_prime;
  for (const auto& raw : orders) {
    BigInt n = abs(raw);
    if (n <= 1) continue;
    BigInt p = 2;
    while (p * p <= n) {
      if (n % p == 0) {
        BigInt pk = 1;
        while (n % p == 0) {
          n /= p;
          pk *= p;
        }
        by_prime[p].push_back(pk);
      }
      p += 1;
    }
    if (n > 1) by_prime[n].push_back(n);
  }
  std::size_t count = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    count = std::max(count, powers.size());
  }
  std::vector<BigInt> factors(count, BigInt(1));
  for (const auto& [p, powers] : by_prime) {
    for (std::size_t j = 0; j < powers.size(); ++j) factors[count - 1 - j] *= powers[j];
  }
  AbelianGroupStructure g;
  g.invariant_factors_ = std::move(factors);
  g.free_rank_ = free_rank;
  return g;
}

BigInt AbelianGroupStructure::torsion_order() const {
  BigInt order = 1;
  for (const auto& d : invariant_factors_) order *= d;
  return order;
}

AbelianGroupStructure AbelianGroupStructure::sylow(std::uint64_t p) const {
  std::vector<BigInt> parts;
  for (const auto& d : invariant_factors_) {
    const auto v = valuation(d, p);
    if (v > 0) parts.push_back(power(BigInt(static_cast<unsigned long>(p)), v));
  }
  return from_cyclic_factors(parts, 0);
}

AbelianGroupStructure AbelianGroupStructure::torsion() const {
  AbelianGroupStructure g = *this;
  g.free_rank_ = 0;
  return g;
}

std::string AbelianGroupStructure::torsion_string() const {
  if (invariant_factors_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < invariant_factors_.size(); ++i) {
    if (i) out << " x ";
    out << "Z/" << invariant_factors_[i];
  }
  return out.str();
}

std::string AbelianGroupStructure::to_string() const {
  if (free_rank_ == 0) return torsion_string();
  return torsion_string() + " (+ Z^" + std::to_string(free_rank_) + ")";
}

}  // namespace abelsnf
