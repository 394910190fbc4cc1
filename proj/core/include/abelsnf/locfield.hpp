#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "abelsnf/bigint.hpp"
#include "abelsnf/cyclotomic.hpp"
#include "abelsnf/poly.hpp"

namespace abelsnf {

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eedcafef00dULL;
inline constexpr std::uint32_t kInitialPrecision = 8;

/// Multiplicative order of p modulo m. Requires p prime, p not dividing m.
std::uint32_t residue_degree(std::uint64_t p, std::uint32_t m);

/// All monic irreducible factors of Phi_m over Z/p, each of degree
/// residue_degree(p, m), sorted lexicographically by coefficient vector with
/// the constant term first. Coefficients are in [0, p).
std::vector<ZPoly> factor_cyclotomic_mod_p(std::uint64_t p, std::uint32_t m,
                                           std::uint64_t seed = kDefaultFactorSeed);

/// Hensel lift of a monic factor f of Phi_m mod p to a monic F over
/// Z/p^target with F = f mod p and F | Phi_m mod p^target. Uses quadratic
/// Newton iteration on the (factor, cofactor) pair.
ZPoly hensel_lift(const ZPoly& f, std::uint64_t p, std::uint32_t m, std::uint32_t target);

/// A prime pi of Z_p[zeta_m] over p, realized as the local ring
/// (Z/p^N)[x]/(F) for a Hensel lift F of an irreducible factor of Phi_m.
/// Immutable; with_precision returns a new context.
class PrimeContext {
 public:
  static PrimeContext create(std::uint64_t p, std::uint32_t m, std::size_t factor_index = 0,
                             std::uint32_t precision = kInitialPrecision);

  std::uint64_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t residue_degree() const { return d_; }
  std::size_t factor_index() const { return factor_index_; }
  std::size_t factor_count() const { return factor_count_; }
  const ZPoly& factor() const { return factor_; }
  std::uint32_t precision() const { return precision_; }
  const ZPoly& lifted() const { return lifted_; }
  const BigInt& modulus() const { return modulus_; }

  PrimeContext with_precision(std::uint32_t precision) const;

 private:
  PrimeContext() = default;

  std::uint64_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t d_ = 0;
  std::size_t factor_index_ = 0;
  std::size_t factor_count_ = 0;
  ZPoly factor_;
  std::uint32_t precision_ = 0;
  ZPoly lifted_;
  BigInt modulus_;
};

/// pi-adic valuation of x; std::nullopt encodes +infinity (x = 0). Raises
/// precision by doubling until the answer is certain.
std::optional<std::uint32_t> pi_valuation(const CyclotomicInteger& x, const PrimeContext& ctx);

/// Single attempt at the context's precision: the valuation if it is below
/// N - 1, otherwise std::nullopt (saturated). x must be nonzero.
std::optional<std::uint32_t> pi_valuation_at_precision(const CyclotomicInteger& x,
                                                       const PrimeContext& ctx);

}  // namespace abelsnf
