#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "abelsnf/abelian_group.hpp"
#include "abelsnf/cayley.hpp"
#include "abelsnf/group.hpp"
#include "abelsnf/snf.hpp"
#include "abelsnf/spectrum.hpp"

namespace abelsnf {

/// Which prime pi over p the valuations are taken at.
struct PiMode {
  enum class Kind { Least, Index, All };
  Kind kind = Kind::Least;
  std::size_t index = 0;

  static PiMode least() { return {}; }
  static PiMode at(std::size_t i) { return {Kind::Index, i}; }
  static PiMode all() { return {Kind::All, 0}; }
};

/// Predicted elementary-divisor multiplicities at p: per_power[i] counts
/// eigenvalues (with multiplicity) of pi-valuation exactly i, and
/// infinite_count the zero eigenvalues.
struct PredictedProfile {
  std::uint64_t p = 0;
  std::map<std::uint32_t, std::uint64_t> per_power;
  std::uint64_t infinite_count = 0;
  /// "least", a factor index, or "all".
  std::string pi_choice = "least";

  bool operator==(const PredictedProfile&) const = default;
};

/// Refuses primes dividing the group order (HypothesisError). Rational
/// eigenvalues use v_p directly; the rest go through a PrimeContext.
PredictedProfile predict_elementary_divisors(const GroupSpec& spec, const MatrixCombo& combo,
                                             std::uint64_t p, PiMode mode = PiMode::least(),
                                             std::uint64_t cap = 1024);

/// Same prediction from an already computed spectrum.
PredictedProfile predict_from_spectrum(const Spectrum& spectrum, std::uint64_t p,
                                       PiMode mode = PiMode::least());

/// Exact agreement, including zero eigenvalues against zero diagonal entries.
bool profiles_match(const PredictedProfile& predicted, const ElementaryDivisorProfile& oracle);

/// Sylow p-subgroup (p odd) of the n-cube critical group from the Laplacian
/// spectrum {2l with multiplicity C(n, l)}.
AbelianGroupStructure sylow_critical_ncube(std::uint32_t n, std::uint64_t p);

/// Sylow p-subgroup of the critical group of K_{q1} x ... x K_{qn}, for p
/// dividing no q_i: prod over S != [n] of Syl_p(Z_{sum_{i not in S} q_i})
/// to the power prod_{i not in S} (q_i - 1).
AbelianGroupStructure sylow_critical_cartesian(std::span<const std::uint32_t> orders, std::uint64_t p);

}  // namespace abelsnf
