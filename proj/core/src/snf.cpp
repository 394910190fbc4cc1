#include "abelsnf/snf.hpp"

#include <algorithm>
#include <limits>

#include "abelsnf/errors.hpp"
#include "local_snf.hpp"

namespace abelsnf {

namespace {

// Signed 64-bit entries that report overflow instead of wrapping; the
// eliminator retries with GMP integers when this fires.
struct Overflow {};

struct I64 {
  std::int64_t v = 0;
};

inline bool is_zero(const I64& a) { return a.v == 0; }
inline bool is_zero(const BigInt& a) { return a == 0; }

inline bool abs_less(const I64& a, const I64& b) {
  const auto ua = a.v < 0 ? 0 - static_cast<std::uint64_t>(a.v) : static_cast<std::uint64_t>(a.v);
  const auto ub = b.v < 0 ? 0 - static_cast<std::uint64_t>(b.v) : static_cast<std::uint64_t>(b.v);
  return ua < ub;
}
inline bool abs_less(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

inline I64 quotient(const I64& a, const I64& b) {
  if (b.v == -1 && a.v == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return {a.v / b.v};
}
inline BigInt quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// a -= q * b
inline void submul(I64& a, const I64& q, const I64& b) {
  std::int64_t prod = 0;
  if (__builtin_mul_overflow(q.v, b.v, &prod)) throw Overflow{};
  if (__builtin_sub_overflow(a.v, prod, &a.v)) throw Overflow{};
}
inline void submul(BigInt& a, const BigInt& q, const BigInt& b) {
  mpz_submul(a.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
}

inline void negate(I64& a) {
  if (a.v == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  a.v = -a.v;
}
inline void negate(BigInt& a) { mpz_neg(a.get_mpz_t(), a.get_mpz_t()); }

inline bool is_negative(const I64& a) { return a.v < 0; }
inline bool is_negative(const BigInt& a) { return sgn(a) < 0; }

inline BigInt to_big(const I64& a) { return big(a.v); }
inline BigInt to_big(const BigInt& a) { return a; }

template <class T>
T from_big(const BigInt& b);
template <>
I64 from_big<I64>(const BigInt& b) {
  if (!fits_i64(b)) throw Overflow{};
  return {to_i64(b)};
}
template <>
BigInt from_big<BigInt>(const BigInt& b) {
  return b;
}

template <class T>
class Dense {
 public:
  Dense(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  static Dense identity(std::size_t n) {
    Dense d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = from_big<T>(BigInt(1));
    return d;
  }
  IntegerMatrix to_integer_matrix() const {
    IntegerMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) = to_big((*this)(r, c));
    }
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

struct RawSmith {
  std::vector<BigInt> diagonal;
  std::optional<IntegerMatrix> left, right;
};

// Diagonalizes by unimodular row/column operations, pivoting on a nonzero
// entry of least absolute value (ties broken by Markowitz count). The
// resulting diagonal is not yet a divisibility chain.
template <class T>
RawSmith diagonalize(const IntegerMatrix& input, bool want_transforms) {
  const std::size_t rows = input.rows(), cols = input.cols();
  Dense<T> a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = from_big<T>(input(r, c));
  }
  std::optional<Dense<T>> left, right;
  if (want_transforms) {
    left = Dense<T>::identity(rows);
    right = Dense<T>::identity(cols);
  }

  const std::size_t steps = std::min(rows, cols);
  std::vector<std::size_t> row_count(rows), col_count(cols);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    // Global pivot choice over the trailing submatrix.
    std::fill(row_count.begin() + t, row_count.end(), 0);
    std::fill(col_count.begin() + t, col_count.end(), 0);
    const T* best = nullptr;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        const T& x = a(r, c);
        if (is_zero(x)) continue;
        ++row_count[r];
        ++col_count[c];
        if (best == nullptr || abs_less(x, *best)) best = &x;
      }
    }
    if (best == nullptr) break;
    std::size_t pr = 0, pc = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    const T pivot_value = *best;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        const T& x = a(r, c);
        if (is_zero(x) || abs_less(pivot_value, x)) continue;
        const std::size_t cost = (row_count[r] - 1) * (col_count[c] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          pr = r;
          pc = c;
        }
      }
    }
    a.swap_rows(t, pr);
    a.swap_cols(t, pc);
    if (left) left->swap_rows(t, pr);
    if (right) right->swap_cols(t, pc);

    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (is_zero(a(r, t))) continue;
        const T q = quotient(a(r, t), a(t, t));
        if (!is_zero(q)) {
          for (std::size_t c = t; c < cols; ++c) {
            if (!is_zero(a(t, c))) submul(a(r, c), q, a(t, c));
          }
          if (left) {
            for (std::size_t c = 0; c < rows; ++c) {
              if (!is_zero((*left)(t, c))) submul((*left)(r, c), q, (*left)(t, c));
            }
          }
        }
        if (!is_zero(a(r, t))) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (is_zero(a(t, c))) continue;
        const T q = quotient(a(t, c), a(t, t));
        if (!is_zero(q)) {
          for (std::size_t r = t; r < rows; ++r) {
            if (!is_zero(a(r, t))) submul(a(r, c), q, a(r, t));
          }
          if (right) {
            for (std::size_t r = 0; r < cols; ++r) {
              if (!is_zero((*right)(r, t))) submul((*right)(r, c), q, (*right)(r, t));
            }
          }
        }
        if (!is_zero(a(t, c))) clean = false;
      }
      if (clean) break;
      // A remainder survived: move the smallest entry of row/column t onto
      // the pivot and repeat.
      std::size_t br = t, bc = t;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (!is_zero(a(r, t)) && abs_less(a(r, t), a(br, bc))) {
          br = r;
          bc = t;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (!is_zero(a(t, c)) && abs_less(a(t, c), a(br, bc))) {
          br = t;
          bc = c;
        }
      }
      if (br != t) {
        a.swap_rows(t, br);
        if (left) left->swap_rows(t, br);
      }
      if (bc != t) {
        a.swap_cols(t, bc);
        if (right) right->swap_cols(t, bc);
      }
    }
    if (is_negative(a(t, t))) {
      for (std::size_t c = t; c < cols; ++c) negate(a(t, c));
      if (left) {
        for (std::size_t c = 0; c < rows; ++c) negate((*left)(t, c));
      }
    }
  }

  RawSmith out;
  out.diagonal.resize(steps);
  for (std::size_t i = 0; i < t; ++i) out.diagonal[i] = to_big(a(i, i));
  if (left) out.left = left->to_integer_matrix();
  if (right) out.right = right->to_integer_matrix();
  return out;
}

// Turns a diagonal into a divisibility chain with 2x2 gcd/lcm moves.
void fix_divisibility(RawSmith& s) {
  auto& d = s.diagonal;
  std::size_t r = 0;
  while (r < d.size() && d[r] != 0) ++r;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (d[j] % d[i] == 0) continue;
      const BigInt a = d[i], b = d[j];
      BigInt g, s_coef, t_coef;
      mpz_gcdext(g.get_mpz_t(), s_coef.get_mpz_t(), t_coef.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      if (s.left) {
        auto& p = *s.left;
        for (std::size_t c = 0; c < p.cols(); ++c) p(i, c) += p(j, c);
      }
      if (s.right) {
        auto& q = *s.right;
        const BigInt bg = b / g, ag = a / g;
        for (std::size_t row = 0; row < q.rows(); ++row) {
          const BigInt ci = q(row, i), cj = q(row, j);
          q(row, i) = s_coef * ci + t_coef * cj;
          q(row, j) = ag * cj - bg * ci;
        }
      }
      if (s.left) {
        auto& p = *s.left;
        const BigInt factor = t_coef * b / g;
        for (std::size_t c = 0; c < p.cols(); ++c) p(j, c) -= factor * p(i, c);
      }
      d[i] = g;
      d[j] = a / g * b;
    }
  }
}

// Diagonalization over Z/D for a nonzero multiple D of the product of the
// nonzero invariant factors. The first `rank` invariant factors divide D, so
// they are recovered exactly as gcd(entry, D); the rest are zero.
std::vector<BigInt> diagonal_mod(const IntegerMatrix& input, const BigInt& modulus, std::size_t rank) {
  const std::size_t rows = input.rows(), cols = input.cols();
  Dense<BigInt> a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) mpz_fdiv_r(a(r, c).get_mpz_t(), input(r, c).get_mpz_t(), modulus.get_mpz_t());
  }
  const auto reduce = [&](BigInt& x) { mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t()); };
  BigInt g, x, y, ag, bg, t1, t2;
  // Combine lines u (pivot) and v so that u gets gcd(u0, v0) and v gets 0 at
  // the pivot position; `at(line, k)` addresses entries along the line.
  const auto combine = [&](auto&& at, std::size_t u, std::size_t v, std::size_t from, std::size_t to,
                           std::size_t pos) {
    BigInt& pu = at(u, pos);
    BigInt& pv = at(v, pos);
    if (mpz_divisible_p(pv.get_mpz_t(), pu.get_mpz_t())) {
      mpz_divexact(t1.get_mpz_t(), pv.get_mpz_t(), pu.get_mpz_t());
      for (std::size_t k = from; k < to; ++k) {
        if (at(u, k) == 0) continue;
        mpz_submul(at(v, k).get_mpz_t(), t1.get_mpz_t(), at(u, k).get_mpz_t());
        reduce(at(v, k));
      }
      return;
    }
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), pu.get_mpz_t(), pv.get_mpz_t());
    mpz_divexact(ag.get_mpz_t(), pu.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(bg.get_mpz_t(), pv.get_mpz_t(), g.get_mpz_t());
    for (std::size_t k = from; k < to; ++k) {
      BigInt& eu = at(u, k);
      BigInt& ev = at(v, k);
      mpz_mul(t1.get_mpz_t(), x.get_mpz_t(), eu.get_mpz_t());
      mpz_addmul(t1.get_mpz_t(), y.get_mpz_t(), ev.get_mpz_t());
      mpz_mul(t2.get_mpz_t(), ag.get_mpz_t(), ev.get_mpz_t());
      mpz_submul(t2.get_mpz_t(), bg.get_mpz_t(), eu.get_mpz_t());
      mpz_fdiv_r(eu.get_mpz_t(), t1.get_mpz_t(), modulus.get_mpz_t());
      mpz_fdiv_r(ev.get_mpz_t(), t2.get_mpz_t(), modulus.get_mpz_t());
    }
  };
  const auto row_at = [&](std::size_t line, std::size_t k) -> BigInt& { return a(line, k); };
  const auto col_at = [&](std::size_t line, std::size_t k) -> BigInt& { return a(k, line); };

  std::vector<BigInt> diagonal(std::min(rows, cols));
  const std::size_t steps = std::min(rank, std::min(rows, cols));
  for (std::size_t t = 0; t < steps; ++t) {
    // pivot: entry of least gcd with the modulus
    std::size_t pr = rows, pc = cols;
    BigInt best, h;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (a(r, c) == 0) continue;
        mpz_gcd(h.get_mpz_t(), a(r, c).get_mpz_t(), modulus.get_mpz_t());
        if (pr == rows || h < best) {
          best = h;
          pr = r;
          pc = c;
          if (best == 1) break;
        }
      }
      if (pr != rows && best == 1) break;
    }
    if (pr == rows) break;
    a.swap_rows(t, pr);
    a.swap_cols(t, pc);
    while (true) {
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) != 0) combine(row_at, t, r, t, cols, t);
      }
      bool clean = true;
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) != 0) combine(col_at, t, c, t, rows, t);
      }
      for (std::size_t r = t + 1; r < rows && clean; ++r) clean = a(r, t) == 0;
      if (clean) break;
    }
    mpz_gcd(diagonal[t].get_mpz_t(), a(t, t).get_mpz_t(), modulus.get_mpz_t());
  }
  return diagonal;
}

// Invariant factors from a nonzero multiple D of their product. When D
// splits over small primes, each prime is handled by local elimination mod
// p^(v_p(D) + 1), which is far cheaper than working modulo D itself.
std::vector<BigInt> diagonal_from_minor(const IntegerMatrix& m, const BigInt& minor, std::size_t rank) {
  constexpr std::uint64_t kTrialBound = 100000;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;
  BigInt rest = minor;
  for (std::uint64_t p = 2; p <= kTrialBound && rest != 1; ++p) {
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    std::uint32_t e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (rest != 1) return diagonal_mod(m, minor, rank);

  std::vector<BigInt> diagonal(std::min(m.rows(), m.cols()));
  for (std::size_t i = 0; i < rank; ++i) diagonal[i] = 1;
  for (const auto& [p, e] : factors) {
    auto valuations = detail::local_valuations_for_rank(m, p, rank, e + 1);
    std::sort(valuations.begin(), valuations.end());
    for (std::size_t i = 0; i < rank; ++i) {
      if (valuations[i] > 0) diagonal[i] *= power(BigInt(static_cast<unsigned long>(p)), valuations[i]);
    }
  }
  return diagonal;
}

void check_dims(const IntegerMatrix& m, std::size_t max_dim) {
  if (std::max(m.rows(), m.cols()) > max_dim) {
    throw ResourceError("matrix dimension " + std::to_string(std::max(m.rows(), m.cols())) +
                        " exceeds SNF cap " + std::to_string(max_dim));
  }
}

}  // namespace

// Fraction-free elimination with full pivoting. Returns the rank r and the
// last pivot, which is +-(an r x r minor) and hence a nonzero multiple of the
// product of the nonzero invariant factors.
std::pair<std::size_t, BigInt> detail::rank_and_minor(const IntegerMatrix& input) {
  const std::size_t rows = input.rows(), cols = input.cols();
  Dense<BigInt> a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = input(r, c);
  }
  BigInt prev = 1;
  std::size_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = k; r < rows && pr == rows; ++r) {
      for (std::size_t c = k; c < cols; ++c) {
        if (a(r, c) != 0) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr == rows) break;
    a.swap_rows(k, pr);
    a.swap_cols(k, pc);
    BigInt tmp;
    for (std::size_t r = k + 1; r < rows; ++r) {
      for (std::size_t c = k + 1; c < cols; ++c) {
        // a(r,c) = (a(k,k) a(r,c) - a(r,k) a(k,c)) / prev
        mpz_mul(tmp.get_mpz_t(), a(r, k).get_mpz_t(), a(k, c).get_mpz_t());
        mpz_mul(a(r, c).get_mpz_t(), a(r, c).get_mpz_t(), a(k, k).get_mpz_t());
        mpz_sub(a(r, c).get_mpz_t(), a(r, c).get_mpz_t(), tmp.get_mpz_t());
        mpz_divexact(a(r, c).get_mpz_t(), a(r, c).get_mpz_t(), prev.get_mpz_t());
      }
      a(r, k) = 0;
    }
    prev = a(k, k);
  }
  return {k, abs(prev)};
}

std::vector<std::uint32_t> detail::local_valuations_for_rank(const IntegerMatrix& m, std::uint64_t p,
                                                             std::size_t rank, std::uint32_t ceiling) {
  // A pass at precision k reports exactly the invariant factors with v_p < k,
  // so it is complete once it finds `rank` pivots.
  std::uint32_t word_precision = 0;
  for (BigInt q = 1; q * p < BigInt(1) << 62; q *= static_cast<unsigned long>(p)) ++word_precision;
  const std::uint32_t word_ceiling = std::min(word_precision, ceiling);
  std::vector<std::uint32_t> valuations;
  for (std::uint32_t k = 4;; k *= 2) {
    const std::uint32_t precision = std::min(k, word_ceiling);
    valuations = local_valuations_word(m, p, precision);
    if (valuations.size() == rank || precision == word_ceiling) break;
  }
  if (valuations.size() != rank) valuations = local_valuations(m, p, ceiling);
  if (valuations.size() != rank) throw Error("local elimination disagrees with the rank");
  return valuations;
}

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const BigInt& d) { return d != 0; }));
}

SmithDecomposition smith_normal_form(const IntegerMatrix& m, bool want_transforms, std::size_t max_dim) {
  check_dims(m, max_dim);
  RawSmith raw;
  try {
    raw = diagonalize<I64>(m, want_transforms);
  } catch (const Overflow&) {
    if (want_transforms) {
      raw = diagonalize<BigInt>(m, true);
    } else {
      // Entries outgrew 64 bits; redo the elimination with bounded residues.
      const auto [rank, minor] = detail::rank_and_minor(m);
      raw.diagonal = rank == 0 ? std::vector<BigInt>(std::min(m.rows(), m.cols()))
                               : diagonal_from_minor(m, minor, rank);
    }
  }
  fix_divisibility(raw);
  return {std::move(raw.diagonal), std::move(raw.left), std::move(raw.right)};
}

ElementaryDivisorProfile profile_from_diagonal(std::span<const BigInt> diagonal, std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  ElementaryDivisorProfile profile;
  profile.p = p;
  for (const auto& d : diagonal) {
    if (d == 0) {
      ++profile.zero_count;
    } else {
      ++profile.multiplicities[valuation(d, p)];
    }
  }
  return profile;
}

ElementaryDivisorProfile elementary_divisors_at(const IntegerMatrix& m, std::uint64_t p,
                                                DivisorMethod method, std::size_t max_dim) {
  if (method == DivisorMethod::LocalModPk) return elementary_divisors_local(m, p, max_dim);
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  const auto snf = smith_normal_form(m, false, max_dim);
  return profile_from_diagonal(snf.diagonal, p);
}

AbelianGroupStructure cokernel_structure(const IntegerMatrix& m, std::size_t max_dim) {
  auto snf = smith_normal_form(m, false, max_dim);
  // Rows beyond min(rows, cols) contribute free summands too.
  auto group = AbelianGroupStructure::from_diagonal(snf.diagonal);
  const std::uint64_t extra = m.rows() > m.cols() ? m.rows() - m.cols() : 0;
  return AbelianGroupStructure::from_cyclic_factors(group.invariant_factors(), group.free_rank() + extra);
}

AbelianGroupStructure critical_group(const GroupSpec& spec, const ConnectingSet& set, std::size_t max_dim) {
  if (set.size() == 0) throw InputError("critical group needs a nonempty connecting set");
  return cokernel_structure(laplacian(spec, set, max_dim), max_dim);
}

BigInt spanning_tree_count(const GroupSpec& spec, const ConnectingSet& set, std::size_t max_dim) {
  if (!set.is_symmetric()) {
    throw InputError("spanning tree count is only supported for symmetric connecting sets");
  }
  const auto lap = laplacian(spec, set, max_dim);
  const std::size_t n = lap.rows();
  if (n == 1) return 1;
  IntegerMatrix minor(n - 1, n - 1);
  for (std::size_t r = 0; r + 1 < n; ++r) {
    for (std::size_t c = 0; c + 1 < n; ++c) minor(r, c) = lap(r, c);
  }
  return abs(determinant(minor));
}

}  // namespace abelsnf
