#pragma once

// Dense polynomials over Z/p for word-sized primes p < 2^32.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "abelsnf/bigint.hpp"

namespace abelsnf::detail {

using FpPoly = std::vector<std::uint64_t>;

class Fp {
 public:
  explicit Fp(std::uint64_t p) : p_(p) {}
  std::uint64_t p() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t inv(std::uint64_t a) const;

  void trim(FpPoly& f) const;
  FpPoly add(const FpPoly& a, const FpPoly& b) const;
  FpPoly sub(const FpPoly& a, const FpPoly& b) const;
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) const;
  FpPoly rem(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
  FpPoly monic(const FpPoly& a) const;
  FpPoly gcd(FpPoly a, FpPoly b) const;
  /// Returns (g, s, t) with s*a + t*b = g monic.
  struct ExtGcd {
    FpPoly g, s, t;
  };
  ExtGcd ext_gcd(const FpPoly& a, const FpPoly& b) const;
  FpPoly powmod(const FpPoly& base, const BigInt& exponent, const FpPoly& modulus) const;

  /// Equal-degree splitting of a squarefree f whose irreducible factors all
  /// have degree d (Cantor-Zassenhaus; trace map for p = 2).
  std::vector<FpPoly> equal_degree_factor(const FpPoly& f, std::uint32_t d, std::mt19937_64& rng) const;

 private:
  std::uint64_t p_;
};

int fp_degree(const FpPoly& f);

}  // namespace abelsnf::detail
