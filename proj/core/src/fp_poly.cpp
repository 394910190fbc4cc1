#include "fp_poly.hpp"

#include "abelsnf/errors.hpp"

namespace abelsnf::detail {

int fp_degree(const FpPoly& f) {
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

std::uint64_t Fp::inv(std::uint64_t a) const {
  // Fermat; p is prime.
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  std::uint64_t e = p_ - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

void Fp::trim(FpPoly& f) const {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly Fp::add(const FpPoly& a, const FpPoly& b) const {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
  trim(r);
  return r;
}

FpPoly Fp::sub(const FpPoly& a, const FpPoly& b) const {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
  trim(r);
  return r;
}

FpPoly Fp::mul(const FpPoly& a, const FpPoly& b) const {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<FpPoly, FpPoly> Fp::divmod(const FpPoly& a, const FpPoly& b) const {
  const int db = fp_degree(b);
  if (db < 0) throw Error("internal: polynomial division by zero");
  FpPoly rem = a;
  trim(rem);
  const int da = fp_degree(rem);
  if (da < db) return {{}, rem};
  FpPoly quot(da - db + 1, 0);
  const std::uint64_t lead_inv = inv(b[db]);
  for (int i = da; i >= db; --i) {
    if (rem[i] == 0) continue;
    const std::uint64_t c = mul(rem[i], lead_inv);
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = sub(rem[i - db + j], mul(c, b[j]));
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

FpPoly Fp::monic(const FpPoly& a) const {
  FpPoly r = a;
  trim(r);
  if (r.empty()) return r;
  const std::uint64_t li = inv(r.back());
  for (auto& c : r) c = mul(c, li);
  return r;
}

FpPoly Fp::gcd(FpPoly a, FpPoly b) const {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Fp::ExtGcd Fp::ext_gcd(const FpPoly& a, const FpPoly& b) const {
  FpPoly r0 = a, r1 = b;
  trim(r0);
  trim(r1);
  FpPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = sub(s0, mul(q, s1));
    auto t2 = sub(t0, mul(q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const std::uint64_t li = inv(r0.back());
  auto scale = [&](FpPoly f) {
    for (auto& c : f) c = mul(c, li);
    trim(f);
    return f;
  };
  return {scale(r0), scale(s0), scale(t0)};
}

FpPoly Fp::powmod(const FpPoly& base, const BigInt& exponent, const FpPoly& modulus) const {
  FpPoly result{1};
  result = rem(result, modulus);
  FpPoly b = rem(base, modulus);
  const auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), modulus);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = rem(mul(result, b), modulus);
  }
  return result;
}

std::vector<FpPoly> Fp::equal_degree_factor(const FpPoly& f, std::uint32_t d,
                                            std::mt19937_64& rng) const {
  const int n = fp_degree(f);
  if (n <= static_cast<int>(d)) return {monic(f)};
  std::uniform_int_distribution<std::uint64_t> coeff(0, p_ - 1);
  BigInt half_exponent;
  if (p_ != 2) {
    BigInt q = power(BigInt(static_cast<unsigned long>(p_)), d);
    half_exponent = (q - 1) / 2;
  }
  while (true) {
    FpPoly a(n, 0);
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (fp_degree(a) < 1) continue;
    FpPoly g = gcd(a, f);
    if (fp_degree(g) > 0 && fp_degree(g) < n) {
      auto left = equal_degree_factor(g, d, rng);
      auto right = equal_degree_factor(divmod(f, g).first, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    FpPoly b;
    if (p_ == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)) mod f.
      FpPoly term = rem(a, f);
      b = term;
      for (std::uint32_t i = 1; i < d; ++i) {
        term = rem(mul(term, term), f);
        b = add(b, term);
      }
    } else {
      b = sub(powmod(a, half_exponent, f), FpPoly{1});
    }
    g = gcd(b, f);
    if (fp_degree(g) > 0 && fp_degree(g) < n) {
      auto left = equal_degree_factor(g, d, rng);
      auto right = equal_degree_factor(divmod(f, g).first, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

}  // namespace abelsnf::detail
