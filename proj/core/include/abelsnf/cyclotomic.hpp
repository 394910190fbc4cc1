#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "abelsnf/bigint.hpp"
#include "abelsnf/poly.hpp"

namespace abelsnf {

inline constexpr std::uint32_t kDefaultCyclotomicCap = 100000;

std::uint64_t euler_phi(std::uint64_t m);

/// Phi_m, computed as (x^m - 1) / prod_{d | m, d < m} Phi_d. Results are
/// memoized per m; the returned reference stays valid for the program's
/// lifetime.
const ZPoly& cyclotomic_polynomial(std::uint32_t m);

/// Exact element of Z[zeta_m]. The stored coefficient vector is always the
/// canonical representative modulo Phi_m, of length exactly phi(m), so
/// equality is coefficientwise.
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(std::uint32_t m = 1);

  static CyclotomicInteger from_integer(std::uint32_t m, const BigInt& value);
  /// zeta_m^t.
  static CyclotomicInteger root_power(std::uint32_t m, std::uint64_t t);
  /// From the exponent basis modulo x^m - 1: counts[t] is the coefficient of
  /// zeta^t. `counts` has length m.
  static CyclotomicInteger from_exponent_counts(std::uint32_t m, std::span<const std::int64_t> counts);
  static CyclotomicInteger from_exponent_counts(std::uint32_t m, std::span<const BigInt> counts);
  /// Any integer polynomial in zeta, reduced to canonical form.
  static CyclotomicInteger from_poly(std::uint32_t m, const ZPoly& poly);

  std::uint32_t modulus() const { return m_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// The value when it is a rational integer.
  std::optional<BigInt> as_integer() const;

  /// Image under the automorphism zeta -> zeta^a, gcd(a, m) = 1.
  CyclotomicInteger galois(std::uint32_t a) const;
  /// Product of all Galois conjugates; always a rational integer.
  BigInt norm() const;

  CyclotomicInteger operator-() const;
  CyclotomicInteger& operator+=(const CyclotomicInteger& other);
  CyclotomicInteger& operator-=(const CyclotomicInteger& other);
  CyclotomicInteger& operator*=(const CyclotomicInteger& other);
  CyclotomicInteger& operator*=(const BigInt& scalar);

  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator*(CyclotomicInteger a, const CyclotomicInteger& b) { return a *= b; }
  friend CyclotomicInteger operator*(CyclotomicInteger a, const BigInt& s) { return a *= s; }
  friend CyclotomicInteger operator*(const BigInt& s, CyclotomicInteger a) { return a *= s; }

  bool operator==(const CyclotomicInteger& other) const;
  /// Total order on (m, coefficient vector) for use as a map key.
  bool operator<(const CyclotomicInteger& other) const;

 private:
  void check_same_ring(const CyclotomicInteger& other) const;
  void canonicalize(ZPoly poly);

  std::uint32_t m_;
  std::vector<BigInt> coeffs_;
};

}  // namespace abelsnf
