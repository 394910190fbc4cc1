#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace abelsnf {

using BigInt = mpz_class;

// p-adic valuation of a nonzero integer. Undefined (returns 0) for zero;
// callers test for zero first.
std::uint32_t valuation(const BigInt& value, std::uint64_t p);
std::uint32_t valuation(std::int64_t value, std::uint64_t p);

bool is_prime(std::uint64_t n);

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt power(const BigInt& base, std::uint64_t exponent);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

// Fits in a signed 64-bit integer.
bool fits_i64(const BigInt& value);
std::int64_t to_i64(const BigInt& value);

inline BigInt big(std::int64_t v) {
  BigInt r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace abelsnf
