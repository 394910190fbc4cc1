#include "abelsnf/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "abelsnf/errors.hpp"

namespace abelsnf {

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

void check_modulus(std::uint32_t m) {
  if (m == 0) throw InputError("cyclotomic modulus must be >= 1");
  if (m > kDefaultCyclotomicCap) {
    throw ResourceError("cyclotomic modulus " + std::to_string(m) + " exceeds cap " +
                        std::to_string(kDefaultCyclotomicCap));
  }
}

}  // namespace

const ZPoly& cyclotomic_polynomial(std::uint32_t m) {
  check_modulus(m);
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<const ZPoly>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return *it->second;
  }
  ZPoly numerator(m + 1);
  numerator[0] = -1;
  numerator[m] = 1;
  for (std::uint32_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto [quot, rem] = poly_divmod_monic(numerator, cyclotomic_polynomial(d));
    if (!rem.empty()) throw Error("internal: cyclotomic division left a remainder");
    numerator = std::move(quot);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(m, std::make_unique<const ZPoly>(std::move(numerator)));
  return *it->second;
}

CyclotomicInteger::CyclotomicInteger(std::uint32_t m) : m_(m) {
  check_modulus(m);
  coeffs_.resize(euler_phi(m));
}

void CyclotomicInteger::canonicalize(ZPoly poly) {
  const ZPoly& phi = cyclotomic_polynomial(m_);
  auto rem = poly_divmod_monic(poly, phi).second;
  rem.resize(coeffs_.size());
  coeffs_ = std::move(rem);
}

CyclotomicInteger CyclotomicInteger::from_integer(std::uint32_t m, const BigInt& value) {
  CyclotomicInteger x(m);
  x.coeffs_[0] = value;
  return x;
}

CyclotomicInteger CyclotomicInteger::root_power(std::uint32_t m, std::uint64_t t) {
  CyclotomicInteger x(m);
  ZPoly poly(t % m + 1);
  poly[t % m] = 1;
  x.canonicalize(std::move(poly));
  return x;
}

CyclotomicInteger CyclotomicInteger::from_exponent_counts(std::uint32_t m,
                                                          std::span<const std::int64_t> counts) {
  if (counts.size() != m) throw InputError("exponent-basis vector must have length m");
  CyclotomicInteger x(m);
  ZPoly poly(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) poly[i] = big(counts[i]);
  }
  x.canonicalize(std::move(poly));
  return x;
}

CyclotomicInteger CyclotomicInteger::from_exponent_counts(std::uint32_t m,
                                                          std::span<const BigInt> counts) {
  if (counts.size() != m) throw InputError("exponent-basis vector must have length m");
  CyclotomicInteger x(m);
  x.canonicalize(ZPoly(counts.begin(), counts.end()));
  return x;
}

CyclotomicInteger CyclotomicInteger::from_poly(std::uint32_t m, const ZPoly& poly) {
  CyclotomicInteger x(m);
  // zeta^m = 1, so fold exponents first to keep the division short.
  ZPoly folded(std::min<std::size_t>(poly.size(), m));
  for (std::size_t i = 0; i < poly.size(); ++i) folded[i % m] += poly[i];
  x.canonicalize(std::move(folded));
  return x;
}

bool CyclotomicInteger::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

std::optional<BigInt> CyclotomicInteger::as_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

CyclotomicInteger CyclotomicInteger::galois(std::uint32_t a) const {
  if (std::gcd(a, m_) != 1) throw InputError("Galois exponent must be coprime to m");
  std::vector<BigInt> counts(m_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    counts[(static_cast<std::uint64_t>(a) * j) % m_] += coeffs_[j];
  }
  return from_exponent_counts(m_, counts);
}

BigInt CyclotomicInteger::norm() const {
  CyclotomicInteger product = from_integer(m_, 1);
  for (std::uint32_t a = 1; a <= m_; ++a) {
    if (std::gcd(a, m_) == 1) product *= galois(a);
  }
  auto value = product.as_integer();
  if (!value) throw Error("internal: norm is not a rational integer");
  return *value;
}

void CyclotomicInteger::check_same_ring(const CyclotomicInteger& other) const {
  if (m_ != other.m_) {
    throw InputError("cyclotomic modulus mismatch: " + std::to_string(m_) + " vs " +
                     std::to_string(other.m_));
  }
}

CyclotomicInteger CyclotomicInteger::operator-() const {
  CyclotomicInteger r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& other) {
  check_same_ring(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& other) {
  check_same_ring(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator*=(const CyclotomicInteger& other) {
  check_same_ring(other);
  canonicalize(poly_mul(coeffs_, other.coeffs_));
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

bool CyclotomicInteger::operator==(const CyclotomicInteger& other) const {
  return m_ == other.m_ && coeffs_ == other.coeffs_;
}

bool CyclotomicInteger::operator<(const CyclotomicInteger& other) const {
  if (m_ != other.m_) return m_ < other.m_;
  return std::lexicographical_compare(coeffs_.begin(), coeffs_.end(), other.coeffs_.begin(),
                                      other.coeffs_.end());
}

}  // namespace abelsnf
