#include <algorithm>
#include <cmath>

#include "abelsnf/errors.hpp"
#include "abelsnf/snf.hpp"
#include "local_snf.hpp"

namespace abelsnf {

namespace {

// Precision that exceeds v_p of every nonzero invariant factor: each one
// divides a nonzero r x r minor, and |minor| <= prod of row norms.
std::uint32_t safe_precision(const IntegerMatrix& m, std::uint64_t p) {
  double log_bound = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt norm2 = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) norm2 += m(r, c) * m(r, c);
    if (norm2 > 1) log_bound += 0.5 * std::log(norm2.get_d());
  }
  return static_cast<std::uint32_t>(std::floor(log_bound / std::log(static_cast<double>(p)) + 1e-9)) + 2;
}

}  // namespace

std::vector<std::uint32_t> detail::local_valuations_word(const IntegerMatrix& input, std::uint64_t p,
                                                         std::uint32_t precision) {
  std::uint64_t modulus = 1;
  for (std::uint32_t i = 0; i < precision; ++i) {
    if (modulus > (std::uint64_t{1} << 62) / p) throw InputError("p^precision does not fit in a machine word");
    modulus *= p;
  }
  const std::size_t rows = input.rows(), cols = input.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    a[i] = mpz_fdiv_ui(input(i / cols, i % cols).get_mpz_t(), modulus);
  }
  auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * cols + c]; };
  auto val = [p](std::uint64_t x) {
    std::uint32_t v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };
  auto mulmod = [modulus](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % modulus);
  };

  std::vector<std::uint32_t> valuations;
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pr = rows, pc = cols;
    std::uint32_t best = precision;
    for (std::size_t r = t; r < rows && best > 0; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (at(r, c) == 0) continue;
        const auto v = val(at(r, c));
        if (v < best) {
          best = v;
          pr = r;
          pc = c;
          if (v == 0) break;
        }
      }
    }
    if (pr == rows) break;
    if (pr != t) {
      for (std::size_t c = t; c < cols; ++c) std::swap(at(t, c), at(pr, c));
    }
    if (pc != t) {
      for (std::size_t r = t; r < rows; ++r) std::swap(at(r, t), at(r, pc));
    }
    valuations.push_back(best);
    std::uint64_t pv = 1;
    for (std::uint32_t i = 0; i < best; ++i) pv *= p;
    BigInt unit_inv = static_cast<unsigned long>(at(t, t) / pv);
    const BigInt big_mod = static_cast<unsigned long>(modulus);
    mpz_invert(unit_inv.get_mpz_t(), unit_inv.get_mpz_t(), big_mod.get_mpz_t());
    const std::uint64_t inv = unit_inv.get_ui();
    for (std::size_t r = t + 1; r < rows; ++r) {
      std::uint64_t& head = at(r, t);
      if (head == 0) continue;
      // factor = (head / p^best) * unit^-1; row_r -= factor * row_t
      const std::uint64_t neg = modulus - mulmod(head / pv, inv);
      for (std::size_t c = t + 1; c < cols; ++c) {
        const std::uint64_t src = at(t, c);
        if (src == 0) continue;
        std::uint64_t& dst = at(r, c);
        dst = static_cast<std::uint64_t>((static_cast<unsigned __int128>(neg) * src + dst) % modulus);
      }
      head = 0;
    }
  }
  return valuations;
}

std::vector<std::uint32_t> detail::local_valuations(const IntegerMatrix& input, std::uint64_t p,
                                                    std::uint32_t precision) {
  const BigInt bp = static_cast<unsigned long>(p);
  const BigInt modulus = power(bp, precision);

  const std::size_t rows = input.rows(), cols = input.cols();
  std::vector<BigInt> a(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    mpz_fdiv_r(a[i].get_mpz_t(), input(i / cols, i % cols).get_mpz_t(), modulus.get_mpz_t());
  }
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * cols + c]; };

  std::vector<std::uint32_t> valuations;
  const std::size_t steps = std::min(rows, cols);
  std::size_t t = 0;
  BigInt unit, unit_inv, factor;
  for (; t < steps; ++t) {
    // Pivot of least valuation.
    std::size_t pr = rows, pc = cols;
    std::uint32_t best = precision;
    for (std::size_t r = t; r < rows && best > 0; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        const BigInt& x = at(r, c);
        if (x == 0) continue;
        const auto v = valuation(x, p);
        if (v < best) {
          best = v;
          pr = r;
          pc = c;
          if (v == 0) break;
        }
      }
    }
    if (pr == rows) break;
    if (pr != t) {
      for (std::size_t c = t; c < cols; ++c) std::swap(at(t, c), at(pr, c));
    }
    if (pc != t) {
      for (std::size_t r = t; r < rows; ++r) std::swap(at(r, t), at(r, pc));
    }
    valuations.push_back(best);
    const BigInt pv = power(bp, best);
    mpz_divexact(unit.get_mpz_t(), at(t, t).get_mpz_t(), pv.get_mpz_t());
    mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
    for (std::size_t r = t + 1; r < rows; ++r) {
      BigInt& head = at(r, t);
      if (head == 0) continue;
      mpz_divexact(factor.get_mpz_t(), head.get_mpz_t(), pv.get_mpz_t());
      factor *= unit_inv;
      mpz_fdiv_r(factor.get_mpz_t(), factor.get_mpz_t(), modulus.get_mpz_t());
      for (std::size_t c = t + 1; c < cols; ++c) {
        const BigInt& src = at(t, c);
        if (src == 0) continue;
        BigInt& dst = at(r, c);
        mpz_submul(dst.get_mpz_t(), factor.get_mpz_t(), src.get_mpz_t());
        mpz_fdiv_r(dst.get_mpz_t(), dst.get_mpz_t(), modulus.get_mpz_t());
      }
      head = 0;
    }
    // Row t beyond the pivot has valuation >= best, so column operations
    // clear it without touching any other row.
  }
  return valuations;
}

ElementaryDivisorProfile elementary_divisors_local(const IntegerMatrix& input, std::uint64_t p,
                                                   std::size_t max_dim) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (std::max(input.rows(), input.cols()) > max_dim) {
    throw ResourceError("matrix dimension exceeds SNF cap " + std::to_string(max_dim));
  }
  ElementaryDivisorProfile profile;
  profile.p = p;
  const auto [rank, minor] = detail::rank_and_minor(input);
  const std::uint32_t ceiling =
      rank == 0 ? 1 : std::min(safe_precision(input, p), valuation(minor, p) + 1);
  const auto valuations =
      rank == 0 ? std::vector<std::uint32_t>{} : detail::local_valuations_for_rank(input, p, rank, ceiling);
  for (auto v : valuations) ++profile.multiplicities[v];
  profile.zero_count = std::min(input.rows(), input.cols()) - valuations.size();
  return profile;
}

}  // namespace abelsnf
