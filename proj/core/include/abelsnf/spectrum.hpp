#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "abelsnf/bigint.hpp"
#include "abelsnf/cayley.hpp"
#include "abelsnf/cyclotomic.hpp"
#include "abelsnf/group.hpp"

namespace abelsnf {

struct SpectrumEntry {
  CyclotomicInteger value;
  std::uint64_t multiplicity = 0;
};

/// Eigenvalues with multiplicity, distinct by canonical cyclotomic form.
/// Rational-integer eigenvalues come first in increasing order, followed by
/// the others in order of first appearance over the character enumeration.
class Spectrum {
 public:
  Spectrum(std::uint32_t modulus, std::uint64_t group_size) : modulus_(modulus), group_size_(group_size) {}

  /// Builds a spectrum from (value, multiplicity) pairs in arrival order,
  /// merging equal values.
  static Spectrum from_values(std::uint32_t modulus, std::uint64_t group_size,
                              std::span<const std::pair<CyclotomicInteger, std::uint64_t>> values);

  std::uint32_t modulus() const { return modulus_; }
  std::uint64_t group_size() const { return group_size_; }
  const std::vector<SpectrumEntry>& entries() const { return entries_; }

  std::uint64_t total_multiplicity() const;
  bool is_integral() const;
  /// sum of eigenvalue * multiplicity.
  CyclotomicInteger trace() const;
  /// Integer eigenvalue -> multiplicity; throws if the spectrum is not integral.
  std::map<BigInt, std::uint64_t> integer_map() const;

 private:
  std::uint32_t modulus_;
  std::uint64_t group_size_;
  std::vector<SpectrumEntry> entries_;
};

/// Eigenvalue of c0*I + sum c_E A_E at each character:
/// c0 + sum_E c_E sum_{e in E} chi(e).
Spectrum spectrum_via_characters(const GroupSpec& spec, const MatrixCombo& combo,
                                 std::uint64_t cap = 1024);

/// sum_{e in E_k} chi(e) via the product formula over k-subsets of
/// coordinates: each coordinate contributes q_i - 1 when chi_i is principal
/// and -1 otherwise. Always a rational integer.
CyclotomicInteger weight_class_character_sum(const GroupSpec& spec, const Character& chi, std::uint32_t k);

/// Krawtchouk value: eigenvalue of the distance-k matrix of H(n, q) on
/// characters with exactly `principal` principal coordinates.
BigInt hamming_eigenvalue(std::uint32_t n, std::uint32_t q, std::uint32_t k, std::uint32_t principal);
/// Multiplicity C(n, l) (q-1)^(n-l) of that eigenvalue.
BigInt hamming_multiplicity(std::uint32_t n, std::uint32_t q, std::uint32_t principal);
/// Closed-form spectrum of A_k on Z_q^n.
Spectrum hamming_spectrum(std::uint32_t n, std::uint32_t q, std::uint32_t k);

struct CartesianEigenvalue {
  std::int64_t value = 0;
  std::uint64_t multiplicity = 0;
};

/// Adjacency eigenvalue of the Cartesian product of complete graphs
/// K_{q1} x ... x K_{qn} (connecting set E_1) for characters whose
/// principal coordinates are exactly `principal`: -n + sum_{i in S} q_i,
/// with multiplicity prod_{i not in S} (q_i - 1).
CartesianEigenvalue cartesian_eigenvalue(std::span<const std::uint32_t> orders,
                                         std::span<const bool> principal);
/// Aggregated over all subsets S.
Spectrum cartesian_spectrum(std::span<const std::uint32_t> orders);

}  // namespace abelsnf
