#include "abelsnf/bigint.hpp"

#include <numeric>

namespace abelsnf {

std::uint32_t valuation(const BigInt& value, std::uint64_t p) {
  if (value == 0) return 0;
  if (p == 2) return static_cast<std::uint32_t>(mpz_scan1(value.get_mpz_t(), 0));
  if (!mpz_divisible_ui_p(value.get_mpz_t(), p)) return 0;
  BigInt rest = abs(value);
  BigInt prime;
  mpz_set_ui(prime.get_mpz_t(), p);
  return static_cast<std::uint32_t>(
      mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t()));
}

std::uint32_t valuation(std::int64_t value, std::uint64_t p) {
  if (value == 0) return 0;
  std::uint64_t v = value < 0 ? 0 - static_cast<std::uint64_t>(value)
                              : static_cast<std::uint64_t>(value);
  std::uint32_t count = 0;
  while (v % p == 0) {
    v /= p;
    ++count;
  }
  return count;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt power(const BigInt& base, std::uint64_t exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

bool fits_i64(const BigInt& value) {
  static const BigInt lo = BigInt("-9223372036854775808");
  static const BigInt hi = BigInt("9223372036854775807");
  return value >= lo && value <= hi;
}

std::int64_t to_i64(const BigInt& value) {
  // mpz_get_si is exact whenever the value fits a long, which is 64 bits here.
  return static_cast<std::int64_t>(mpz_get_si(value.get_mpz_t()));
}

}  // namespace abelsnf
