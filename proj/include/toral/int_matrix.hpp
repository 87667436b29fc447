#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "toral/numeric.hpp"

namespace toral {

// Dense matrix over Z with unbounded entries, row-major. Zero-dimensional
// shapes (0 x n, n x 0) are legal and behave as the evident degenerate maps.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix diagonal(const std::vector<Int>& entries);
  static IntMatrix scalar(std::size_t n, const Int& value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix negated() const;
  bool operator==(const IntMatrix& rhs) const = default;

  std::vector<Int> apply(const std::vector<Int>& v) const;

  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
  IntMatrix column(std::size_t j) const;
  IntMatrix columns(std::size_t from, std::size_t count) const;

  bool is_zero() const;
  bool is_identity() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[a] += q * row[b]
  void add_row_multiple(std::size_t a, std::size_t b, const Int& q);
  void add_col_multiple(std::size_t a, std::size_t b, const Int& q);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

  // Bareiss fraction-free determinant; requires a square matrix.
  Int determinant() const;

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

}  // namespace toral
