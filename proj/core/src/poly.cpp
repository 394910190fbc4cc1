#include "abelsnf/poly.hpp"

#include <algorithm>

#include "abelsnf/errors.hpp"

namespace abelsnf {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const ZPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

ZPoly poly_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly poly_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly poly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

std::pair<ZPoly, ZPoly> poly_divmod_monic(const ZPoly& a, const ZPoly& monic) {
  const int db = degree(monic);
  if (db < 0 || monic[db] != 1) throw InputError("divisor must be monic");
  ZPoly rem = a;
  trim(rem);
  const int da = degree(rem);
  if (da < db) return {{}, rem};
  ZPoly quot(da - db + 1);
  for (int i = da; i >= db; --i) {
    if (rem[i] == 0) continue;
    const BigInt c = rem[i];
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) {
      if (monic[j] != 0) rem[i - db + j] -= c * monic[j];
    }
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

ZPoly poly_reduce(const ZPoly& a, const BigInt& modulus) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), modulus.get_mpz_t());
  trim(r);
  return r;
}

ZPoly poly_add_mod(const ZPoly& a, const ZPoly& b, const BigInt& modulus) {
  return poly_reduce(poly_add(a, b), modulus);
}

ZPoly poly_sub_mod(const ZPoly& a, const ZPoly& b, const BigInt& modulus) {
  return poly_reduce(poly_sub(a, b), modulus);
}

ZPoly poly_mul_mod(const ZPoly& a, const ZPoly& b, const BigInt& modulus) {
  return poly_reduce(poly_mul(a, b), modulus);
}

std::pair<ZPoly, ZPoly> poly_divmod_monic_mod(const ZPoly& a, const ZPoly& monic,
                                              const BigInt& modulus) {
  const int db = degree(monic);
  if (db < 0 || monic[db] != 1) throw InputError("divisor must be monic");
  ZPoly rem = poly_reduce(a, modulus);
  const int da = degree(rem);
  if (da < db) return {{}, rem};
  ZPoly quot(da - db + 1);
  for (int i = da; i >= db; --i) {
    mpz_fdiv_r(rem[i].get_mpz_t(), rem[i].get_mpz_t(), modulus.get_mpz_t());
    if (rem[i] == 0) continue;
    const BigInt c = rem[i];
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) {
      if (monic[j] != 0) rem[i - db + j] -= c * monic[j];
    }
  }
  return {poly_reduce(quot, modulus), poly_reduce(rem, modulus)};
}

}  // namespace abelsnf
