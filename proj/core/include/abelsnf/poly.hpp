#pragma once

#include <utility>
#include <vector>

#include "abelsnf/bigint.hpp"

namespace abelsnf {

/// Dense integer polynomial, coefficient of x^i at index i. Normalized
/// polynomials carry no trailing zeros; the zero polynomial is empty.
using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p);
int degree(const ZPoly& p);

ZPoly poly_add(const ZPoly& a, const ZPoly& b);
ZPoly poly_sub(const ZPoly& a, const ZPoly& b);
ZPoly poly_mul(const ZPoly& a, const ZPoly& b);

/// Quotient and remainder of a by a monic divisor, exactly over Z.
std::pair<ZPoly, ZPoly> poly_divmod_monic(const ZPoly& a, const ZPoly& monic);

// Arithmetic in (Z/modulus)[x]; inputs and outputs have coefficients in
// [0, modulus).
ZPoly poly_reduce(const ZPoly& a, const BigInt& modulus);
ZPoly poly_add_mod(const ZPoly& a, const ZPoly& b, const BigInt& modulus);
ZPoly poly_sub_mod(const ZPoly& a, const ZPoly& b, const BigInt& modulus);
ZPoly poly_mul_mod(const ZPoly& a, const ZPoly& b, const BigInt& modulus);
std::pair<ZPoly, ZPoly> poly_divmod_monic_mod(const ZPoly& a, const ZPoly& monic,
                                              const BigInt& modulus);

}  // namespace abelsnf
