#include "abelsnf/locfield.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "abelsnf/errors.hpp"
#include "fp_poly.hpp"

namespace abelsnf {

namespace {

void check_unramified(std::uint64_t p, std::uint32_t m) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (p > std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceError("prime " + std::to_string(p) + " is above the supported range");
  }
  if (m % p == 0) {
    throw HypothesisError("p = " + std::to_string(p) + " divides m = " + std::to_string(m) +
                          "; p must be unramified");
  }
}

detail::FpPoly to_fp(const ZPoly& f, std::uint64_t p) {
  detail::FpPoly out(f.size());
  BigInt r;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), p);
    out[i] = r.get_ui();
  }
  detail::Fp(p).trim(out);
  return out;
}

ZPoly from_fp(const detail::FpPoly& f) {
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = static_cast<unsigned long>(f[i]);
  trim(out);
  return out;
}

}  // namespace

std::uint32_t residue_degree(std::uint64_t p, std::uint32_t m) {
  check_unramified(p, m);
  if (m == 1) return 1;
  const std::uint64_t base = p % m;
  std::uint64_t power = base;
  std::uint32_t d = 1;
  while (power != 1) {
    power = (power * base) % m;
    ++d;
  }
  return d;
}

std::vector<ZPoly> factor_cyclotomic_mod_p(std::uint64_t p, std::uint32_t m, std::uint64_t seed) {
  const std::uint32_t d = residue_degree(p, m);
  const detail::Fp field(p);
  const auto phi = to_fp(cyclotomic_polynomial(m), p);
  std::mt19937_64 rng(seed);
  auto factors = field.equal_degree_factor(phi, d, rng);
  std::vector<ZPoly> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(from_fp(field.monic(f)));
  std::sort(out.begin(), out.end());
  return out;
}

ZPoly hensel_lift(const ZPoly& f, std::uint64_t p, std::uint32_t m, std::uint32_t target) {
  check_unramified(p, m);
  if (target == 0) throw InputError("Hensel precision must be >= 1");
  const detail::Fp field(p);
  const ZPoly& phi = cyclotomic_polynomial(m);
  const auto f_fp = field.monic(to_fp(f, p));
  auto [cof_fp, rem_fp] = field.divmod(to_fp(phi, p), f_fp);
  if (!rem_fp.empty()) throw InputError("Hensel lift: f does not divide Phi_m mod p");
  auto eg = field.ext_gcd(f_fp, cof_fp);
  if (eg.g.size() != 1) throw HypothesisError("Hensel lift: factor and cofactor are not coprime");

  // Invariants modulo M: g * h = phi, s * g + t * h = 1, g and h monic.
  ZPoly g = from_fp(f_fp), h = from_fp(cof_fp), s = from_fp(eg.s), t = from_fp(eg.t);
  const BigInt bp = static_cast<unsigned long>(p);
  const BigInt final_modulus = power(bp, target);
  BigInt modulus = bp;
  while (modulus < final_modulus) {
    const BigInt next = modulus * modulus;
    const ZPoly e = poly_sub_mod(phi, poly_mul(g, h), next);
    auto [q, r] = poly_divmod_monic_mod(poly_mul(s, e), h, next);
    const ZPoly g_next = poly_reduce(poly_add(poly_add(g, poly_mul(t, e)), poly_mul(q, g)), next);
    const ZPoly h_next = poly_add_mod(h, r, next);
    const ZPoly b = poly_reduce(poly_sub(poly_add(poly_mul(s, g_next), poly_mul(t, h_next)), ZPoly{1}), next);
    auto [c, dd] = poly_divmod_monic_mod(poly_mul(s, b), h_next, next);
    s = poly_sub_mod(s, dd, next);
    t = poly_reduce(poly_sub(poly_sub(t, poly_mul(t, b)), poly_mul(c, g_next)), next);
    g = g_next;
    h = h_next;
    modulus = next;
  }
  return poly_reduce(g, final_modulus);
}

PrimeContext PrimeContext::create(std::uint64_t p, std::uint32_t m, std::size_t factor_index,
                                  std::uint32_t precision) {
  PrimeContext ctx;
  ctx.p_ = p;
  ctx.m_ = m;
  ctx.d_ = abelsnf::residue_degree(p, m);
  auto factors = factor_cyclotomic_mod_p(p, m);
  if (factor_index >= factors.size()) {
    throw InputError("factor index " + std::to_string(factor_index) + " out of range (" +
                     std::to_string(factors.size()) + " primes over p)");
  }
  ctx.factor_index_ = factor_index;
  ctx.factor_count_ = factors.size();
  ctx.factor_ = std::move(factors[factor_index]);
  return ctx.with_precision(precision);
}

PrimeContext PrimeContext::with_precision(std::uint32_t precision) const {
  if (precision < 2) precision = 2;
  PrimeContext ctx = *this;
  ctx.precision_ = precision;
  ctx.lifted_ = hensel_lift(factor_, p_, m_, precision);
  ctx.modulus_ = power(BigInt(static_cast<unsigned long>(p_)), precision);
  return ctx;
}

std::optional<std::uint32_t> pi_valuation_at_precision(const CyclotomicInteger& x,
                                                       const PrimeContext& ctx) {
  if (x.modulus() != ctx.m()) throw InputError("element modulus does not match the prime context");
  ZPoly poly(x.coeffs().begin(), x.coeffs().end());
  trim(poly);
  const ZPoly image = poly_divmod_monic_mod(poly, ctx.lifted(), ctx.modulus()).second;
  std::optional<std::uint32_t> best;
  for (const auto& c : image) {
    if (c == 0) continue;
    const auto v = valuation(c, ctx.p());
    if (!best || v < *best) best = v;
  }
  if (!best || *best + 1 >= ctx.precision()) return std::nullopt;
  return best;
}

std::optional<std::uint32_t> pi_valuation(const CyclotomicInteger& x, const PrimeContext& ctx) {
  if (x.modulus() != ctx.m()) throw InputError("element modulus does not match the prime context");
  if (x.is_zero()) return std::nullopt;
  PrimeContext current = ctx;
  while (true) {
    if (auto v = pi_valuation_at_precision(x, current)) return v;
    current = current.with_precision(current.precision() * 2);
  }
}

}  // namespace abelsnf
