#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace vanish {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  static IntegerMatrix identity(std::size_t n);
  /// Throws std::invalid_argument on ragged input.
  static IntegerMatrix from_rows(const std::vector<IntegerVector>& rows);
  static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  /// Matrix whose columns are the given vectors, all of length `rows`.
  static IntegerMatrix from_columns(std::size_t rows, const std::vector<IntegerVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerVector row(std::size_t r) const;
  IntegerVector column(std::size_t c) const;
  std::vector<IntegerVector> to_rows() const;

  IntegerMatrix transpose() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  IntegerMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntegerMatrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  IntegerVector apply(const IntegerVector& x) const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b);
/// Block-diagonal sum; empty list gives the 0x0 matrix.
IntegerMatrix direct_sum(const std::vector<IntegerMatrix>& blocks);

/// Fraction-free (Bareiss) determinant. Throws std::invalid_argument if not square.
Integer determinant(const IntegerMatrix& m);

}  // namespace vanish
