#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "abelsnf/bigint.hpp"

namespace abelsnf {

/// Dense rectangular matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerMatrix transpose() const;

  bool operator==(const IntegerMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const IntegerMatrix& m);

/// Plain-text format: "rows cols" then the entries in row-major order,
/// whitespace separated.
IntegerMatrix read_matrix_text(std::istream& in);
void write_matrix_text(std::ostream& out, const IntegerMatrix& m);

}  // namespace abelsnf
