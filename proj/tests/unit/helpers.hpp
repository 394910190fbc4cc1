#pragma once

#include <random>

#include "abelsnf/cayley.hpp"
#include "abelsnf/matrix.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Matrix to_oracle(const abelsnf::IntegerMatrix& m) {
  oracle::Matrix out(m.rows(), std::vector<oracle::Int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  }
  return out;
}

inline abelsnf::IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                            int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  abelsnf::IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  }
  return m;
}

// Product of elementary row operations, hence determinant +-1.
inline abelsnf::IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  auto u = abelsnf::IntegerMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-3, 3);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int k = mult(rng);
    for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
    if (s % 5 == 0) {
      for (std::size_t c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
    }
  }
  return u;
}


}  // namespace testing_support
