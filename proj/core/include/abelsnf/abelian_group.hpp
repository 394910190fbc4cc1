#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "abelsnf/bigint.hpp"

namespace abelsnf {

/// Z/d1 x ... x Z/dk x Z^free_rank with 1 < d1 | d2 | ... | dk.
class AbelianGroupStructure {
 public:
  AbelianGroupStructure() = default;

  /// From an SNF diagonal: units are dropped, zeros become free rank, signs
  /// are ignored. The diagonal need not be a divisibility chain.
  static AbelianGroupStructure from_diagonal(std::span<const BigInt> diagonal);
  /// From cyclic factors of arbitrary orders (e.g. prime powers), regrouped
  /// into the invariant-factor chain.
  static AbelianGroupStructure from_cyclic_factors(std::span<const BigInt> orders,
                                                   std::uint64_t free_rank = 0);

  const std::vector<BigInt>& invariant_factors() const { return invariant_factors_; }
  std::uint64_t free_rank() const { return free_rank_; }
  /// Order of the torsion part.
  BigInt torsion_order() const;
  /// The Sylow p-subgroup of the torsion part.
  AbelianGroupStructure sylow(std::uint64_t p) const;
  AbelianGroupStructure torsion() const;

  /// "Z/2 x Z/2 x Z/6 (+ Z^1)", free part omitted at rank 0; trivial torsion prints as "0".
  std::string to_string() const;
  std::string torsion_string() const;

  bool operator==(const AbelianGroupStructure&) const = default;

 private:
  std::vector<BigInt> invariant_factors_;
  std::uint64_t free_rank_ = 0;
};

}  // namespace abelsnf
