#include "abelsnf/spectrum.hpp"

#include <algorithm>

#include "abelsnf/errors.hpp"

namespace abelsnf {

Spectrum Spectrum::from_values(std::uint32_t modulus, std::uint64_t group_size,
                               std::span<const std::pair<CyclotomicInteger, std::uint64_t>> values) {
  Spectrum s(modulus, group_size);
  std::map<CyclotomicInteger, std::size_t> slot;
  std::vector<SpectrumEntry> merged;
  for (const auto& [value, mult] : values) {
    if (value.modulus() != modulus) throw InputError("eigenvalue modulus mismatch");
    auto [it, inserted] = slot.emplace(value, merged.size());
    if (inserted) {
      merged.push_back({value, mult});
    } else {
      merged[it->second].multiplicity += mult;
    }
  }
  std::stable_partition(merged.begin(), merged.end(),
                        [](const SpectrumEntry& e) { return e.value.as_integer().has_value(); });
  auto integral_end = std::find_if(merged.begin(), merged.end(),
                                   [](const SpectrumEntry& e) { return !e.value.as_integer(); });
  std::sort(merged.begin(), integral_end, [](const SpectrumEntry& a, const SpectrumEntry& b) {
    return *a.value.as_integer() < *b.value.as_integer();
  });
  s.entries_ = std::move(merged);
  return s;
}

std::uint64_t Spectrum::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

bool Spectrum::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const SpectrumEntry& e) { return e.value.as_integer().has_value(); });
}

CyclotomicInteger Spectrum::trace() const {
  CyclotomicInteger total(modulus_);
  for (const auto& e : entries_) total += e.value * BigInt(static_cast<unsigned long>(e.multiplicity));
  return total;
}

std::map<BigInt, std::uint64_t> Spectrum::integer_map() const {
  std::map<BigInt, std::uint64_t> out;
  for (const auto& e : entries_) {
    auto v = e.value.as_integer();
    if (!v) throw InputError("spectrum has non-integer eigenvalues");
    out[*v] += e.multiplicity;
  }
  return out;
}

Spectrum spectrum_via_characters(const GroupSpec& spec, const MatrixCombo& combo, std::uint64_t cap) {
  if (spec.size() > cap) {
    throw ResourceError("group order " + std::to_string(spec.size()) + " exceeds spectrum cap " +
                        std::to_string(cap));
  }
  const std::uint32_t m = spec.exponent();
  std::vector<std::pair<CyclotomicInteger, std::uint64_t>> values;
  values.reserve(spec.size());
  std::map<std::vector<std::int64_t>, CyclotomicInteger> memo;
  std::vector<std::int64_t> counts(m);
  for (std::uint64_t chi = 0; chi < spec.size(); ++chi) {
    std::fill(counts.begin(), counts.end(), 0);
    counts[0] += combo.identity_coeff;
    for (const auto& term : combo.terms) {
      for (auto e : term.set.indices()) counts[char_exponent(spec, chi, e)] += term.coeff;
    }
    // Many characters share an exponent-basis vector; canonicalize once each.
    auto it = memo.find(counts);
    if (it == memo.end()) {
      it = memo.emplace(counts, CyclotomicInteger::from_exponent_counts(m, counts)).first;
    }
    values.emplace_back(it->second, 1);
  }
  return Spectrum::from_values(m, spec.size(), values);
}

CyclotomicInteger weight_class_character_sum(const GroupSpec& spec, const Character& chi, std::uint32_t k) {
  spec.validate(chi.coords);
  if (k > spec.rank()) throw InputError("weight exceeds group rank");
  // Elementary symmetric polynomial e_k of the per-coordinate sums.
  std::vector<BigInt> e(k + 1);
  e[0] = 1;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    const BigInt term = chi.coords[i] == 0 ? BigInt(static_cast<long>(spec.orders()[i]) - 1) : BigInt(-1);
    for (std::size_t j = std::min<std::size_t>(k, i + 1); j >= 1; --j) e[j] += e[j - 1] * term;
  }
  return CyclotomicInteger::from_integer(spec.exponent(), e[k]);
}

BigInt hamming_eigenvalue(std::uint32_t n, std::uint32_t q, std::uint32_t k, std::uint32_t principal) {
  if (k > n || principal > n) throw InputError("Krawtchouk arguments must satisfy k, l <= n");
  if (q < 2) throw InputError("alphabet size must be >= 2");
  BigInt total = 0;
  const BigInt qm1 = q - 1;
  for (std::uint32_t j = 0; j <= k; ++j) {
    if (j > principal || k - j > n - principal) continue;
    BigInt term = binomial(principal, j) * binomial(n - principal, k - j) * power(qm1, j);
    if ((k - j) % 2) term = -term;
    total += term;
  }
  return total;
}

BigInt hamming_multiplicity(std::uint32_t n, std::uint32_t q, std::uint32_t principal) {
  return binomial(n, principal) * power(BigInt(q - 1), n - principal);
}

Spectrum hamming_spectrum(std::uint32_t n, std::uint32_t q, std::uint32_t k) {
  std::vector<std::pair<CyclotomicInteger, std::uint64_t>> values;
  for (std::uint32_t l = 0; l <= n; ++l) {
    const BigInt mult = hamming_multiplicity(n, q, l);
    if (!mpz_fits_ulong_p(mult.get_mpz_t())) throw ResourceError("multiplicity overflows 64 bits");
    values.emplace_back(CyclotomicInteger::from_integer(q, hamming_eigenvalue(n, q, k, l)), mult.get_ui());
  }
  BigInt size = power(BigInt(q), n);
  return Spectrum::from_values(q, size.get_ui(), values);
}

CartesianEigenvalue cartesian_eigenvalue(std::span<const std::uint32_t> orders, std::span<const bool> principal) {
  if (orders.size() != principal.size()) throw InputError("principal mask length must equal the rank");
  CartesianEigenvalue out;
  out.value = -static_cast<std::int64_t>(orders.size());
  out.multiplicity = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (principal[i]) {
      out.value += orders[i];
    } else {
      out.multiplicity *= orders[i] - 1;
    }
  }
  return out;
}

Spectrum cartesian_spectrum(std::span<const std::uint32_t> orders) {
  const GroupSpec spec(std::vector<std::uint32_t>(orders.begin(), orders.end()));
  const std::size_t n = orders.size();
  if (n >= 63) throw ResourceError("too many factors for subset enumeration");
  std::vector<std::pair<CyclotomicInteger, std::uint64_t>> values;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    bool mask_arr[64];
    for (std::size_t i = 0; i < n; ++i) mask_arr[i] = (mask >> i) & 1;
    auto ev = cartesian_eigenvalue(orders, std::span<const bool>(mask_arr, n));
    values.emplace_back(CyclotomicInteger::from_integer(spec.exponent(), big(ev.value)), ev.multiplicity);
  }
  return Spectrum::from_values(spec.exponent(), spec.size(), values);
}

}  // namespace abelsnf
