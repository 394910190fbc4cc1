#include "abelsnf/predictor.hpp"

#include <vector>

#include "abelsnf/errors.hpp"
#include "abelsnf/locfield.hpp"

namespace abelsnf {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
}

PredictedProfile profile_at(const Spectrum& spectrum, std::uint64_t p,
                            const std::optional<PrimeContext>& ctx) {
  PredictedProfile out;
  out.p = p;
  for (const auto& entry : spectrum.entries()) {
    if (entry.value.is_zero()) {
      out.infinite_count += entry.multiplicity;
      continue;
    }
    std::uint32_t v = 0;
    if (auto integer = entry.value.as_integer()) {
      v = valuation(*integer, p);
    } else {
      v = *pi_valuation(entry.value, *ctx);
    }
    out.per_power[v] += entry.multiplicity;
  }
  return out;
}

}  // namespace

PredictedProfile predict_from_spectrum(const Spectrum& spectrum, std::uint64_t p, PiMode mode) {
  require_prime(p);
  if (spectrum.group_size() % p == 0) {
    throw HypothesisError("p = " + std::to_string(p) + " divides |G| = " +
                          std::to_string(spectrum.group_size()) + "; the prediction does not apply");
  }
  const std::uint32_t m = spectrum.modulus();
  if (spectrum.is_integral()) {
    auto out = profile_at(spectrum, p, std::nullopt);
    if (mode.kind == PiMode::Kind::All) out.pi_choice = "all";
    if (mode.kind == PiMode::Kind::Index) out.pi_choice = std::to_string(mode.index);
    return out;
  }
  switch (mode.kind) {
    case PiMode::Kind::Least:
      return profile_at(spectrum, p, PrimeContext::create(p, m, 0));
    case PiMode::Kind::Index: {
      auto out = profile_at(spectrum, p, PrimeContext::create(p, m, mode.index));
      out.pi_choice = std::to_string(mode.index);
      return out;
    }
    case PiMode::Kind::All: {
      const auto first = PrimeContext::create(p, m, 0);
      auto reference = profile_at(spectrum, p, first);
      for (std::size_t i = 1; i < first.factor_count(); ++i) {
        auto other = profile_at(spectrum, p, PrimeContext::create(p, m, i));
        if (other.per_power != reference.per_power || other.infinite_count != reference.infinite_count) {
          throw Error("profiles differ between primes over " + std::to_string(p) + " (factor 0 vs " +
                      std::to_string(i) + ")");
        }
      }
      reference.pi_choice = "all";
      return reference;
    }
  }
  return {};
}

PredictedProfile predict_elementary_divisors(const GroupSpec& spec, const MatrixCombo& combo,
                                             std::uint64_t p, PiMode mode, std::uint64_t cap) {
  require_prime(p);
  if (spec.size() % p == 0) {
    throw HypothesisError("p = " + std::to_string(p) + " divides |G| = " + std::to_string(spec.size()) +
                          "; the prediction does not apply");
  }
  return predict_from_spectrum(spectrum_via_characters(spec, combo, cap), p, mode);
}

bool profiles_match(const PredictedProfile& predicted, const ElementaryDivisorProfile& oracle) {
  return predicted.p == oracle.p && predicted.per_power == oracle.multiplicities &&
         predicted.infinite_count == oracle.zero_count;
}

AbelianGroupStructure sylow_critical_ncube(std::uint32_t n, std::uint64_t p) {
  require_prime(p);
  if (p == 2) throw HypothesisError("the 2-part of the n-cube critical group is not determined by the spectrum");
  std::vector<BigInt> parts;
  const BigInt bp = static_cast<unsigned long>(p);
  for (std::uint32_t l = 1; l <= n; ++l) {
    const auto a = valuation(static_cast<std::int64_t>(l), p);
    if (a == 0) continue;
    const BigInt count = binomial(n, l);
    const BigInt pa = power(bp, a);
    for (BigInt c = 0; c < count; ++c) parts.push_back(pa);
  }
  return AbelianGroupStructure::from_cyclic_factors(parts);
}

AbelianGroupStructure sylow_critical_cartesian(std::span<const std::uint32_t> orders, std::uint64_t p) {
  require_prime(p);
  for (auto q : orders) {
    if (q % p == 0) {
      throw HypothesisError("p = " + std::to_string(p) + " divides the factor order " + std::to_string(q));
    }
  }
  const std::size_t n = orders.size();
  if (n >= 63) throw ResourceError("too many factors for subset enumeration");
  const BigInt bp = static_cast<unsigned long>(p);
  std::vector<BigInt> parts;
  const std::uint64_t full = (1ULL << n) - 1;
  for (std::uint64_t principal = 0; principal < full; ++principal) {
    std::uint64_t value = 0;
    std::uint64_t mult = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if ((principal >> i) & 1) continue;
      value += orders[i];
      mult *= orders[i] - 1;
    }
    const auto a = valuation(static_cast<std::int64_t>(value), p);
    if (a == 0) continue;
    const BigInt pa = power(bp, a);
    for (std::uint64_t c = 0; c < mult; ++c) parts.push_back(pa);
  }
  return AbelianGroupStructure::from_cyclic_factors(parts);
}

}  // namespace abelsnf
