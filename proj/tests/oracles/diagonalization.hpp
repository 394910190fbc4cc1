#pragma once

#include <cstdint>
#include <vector>

#include "abelsnf/cayley.hpp"
#include "abelsnf/cyclotomic.hpp"
#include "abelsnf/spectrum.hpp"

namespace oracle {

// Checks M A^t conj(M)^t = |G| diag(lambda_chi) entry by entry in Z[zeta_m],
// where M is the character table and lambda_chi = sum_{e in E} chi(e).
// Every product here is a root of unity, so each entry is accumulated as a
// vector of exponent counts and converted once.
inline bool check_diagonalization(const abelsnf::GroupSpec& spec, const abelsnf::ConnectingSet& set) {
  const auto& orders = spec.orders();
  const std::uint64_t n = spec.size();
  const std::uint32_t m = spec.exponent();
  std::vector<std::uint32_t> table(n * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    const auto ca = spec.coords_of(a);
    for (std::uint64_t g = 0; g < n; ++g) {
      const auto cg = spec.coords_of(g);
      std::uint64_t t = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) t += std::uint64_t{m / orders[i]} * ca[i] * cg[i];
      table[a * n + g] = static_cast<std::uint32_t>(t % m);
    }
  }
  std::vector<std::uint64_t> e_list = set.indices();
  std::vector<std::int64_t> counts(m);
  for (std::uint64_t chi = 0; chi < n; ++chi) {
    std::fill(counts.begin(), counts.end(), 0);
    for (auto e : e_list) counts[table[chi * n + e]] += 1;
    const auto lambda = abelsnf::CyclotomicInteger::from_exponent_counts(m, counts);
    const auto diag = lambda * abelsnf::BigInt(static_cast<unsigned long>(n));
    for (std::uint64_t psi = 0; psi < n; ++psi) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint64_t h = 0; h < n; ++h) {
        const std::uint32_t down = (m - table[psi * n + h]) % m;
        for (auto e : e_list) counts[(table[chi * n + spec.add(h, e)] + down) % m] += 1;
      }
      const auto entry = abelsnf::CyclotomicInteger::from_exponent_counts(m, counts);
      if (chi == psi ? !(entry == diag) : !entry.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace oracle
