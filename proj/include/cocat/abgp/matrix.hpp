#pragma once

// Dense matrices over arbitrary-precision integers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cocat::abgp {

using BigInt = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Row-major construction, e.g. IntMatrix::from_rows({{1, 0}, {0, 1}}).
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  /// `cols` is needed when there are no rows.
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix column(const std::vector<BigInt>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<BigInt> col(std::size_t c) const;
  std::vector<BigInt> row(std::size_t r) const;
  bool is_zero() const;
  bool col_is_zero(std::size_t c) const;

  IntMatrix transpose() const;
  IntMatrix select_cols(const std::vector<std::size_t>& cols) const;
  IntMatrix select_rows(const std::vector<std::size_t>& rows) const;
  /// Drops zero columns.
  IntMatrix nonzero_cols() const;

  // Elementary operations used by the normal-form kernels.
  void swap_cols(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_col(std::size_t c);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& v);

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
/// Kronecker product a (x) b.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination; square matrices only.
BigInt determinant(const IntMatrix& m);

/// "r c\n" followed by row-major entries, one row per line.
std::string to_text(const IntMatrix& m);
/// Compact single-line rendering such as [[1 0] [0 1]].
std::string to_string(const IntMatrix& m);

}  // namespace cocat::abgp
