#include "toral/int_matrix.hpp"

#include <cassert>

#include "toral/error.hpp"

namespace toral {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(ErrorKind::bad_params, "ragged row list");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Int>> conv;
  for (const auto& row : rows) {
    std::vector<Int> r;
    for (long v : row) r.emplace_back(v);
    conv.push_back(std::move(r));
  }
  return from_rows(conv);
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::scalar(std::size_t n, const Int& value) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = value;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorKind::bad_params, "matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  Int acc;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        acc = a * rhs.at(k, j);
        out.at(i, j) += acc;
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail(ErrorKind::bad_params, "matrix sum shape mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail(ErrorKind::bad_params, "matrix difference shape mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_) fail(ErrorKind::bad_params, "matrix apply shape mismatch");
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) fail(ErrorKind::bad_params, "hstack row mismatch");
  IntMatrix out(a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
  }
  return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.cols_) fail(ErrorKind::bad_params, "vstack column mismatch");
  IntMatrix out(a.rows_ + b.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out.at(a.rows_ + i, j) = b.at(i, j);
  return out;
}

IntMatrix IntMatrix::column(std::size_t j) const { return columns(j, 1); }

IntMatrix IntMatrix::columns(std::size_t from, std::size_t count) const {
  IntMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out.at(i, j) = at(i, from + j);
  return out;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) += q * at(b, j);
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) += q * at(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntMatrix::negate_col(std::size_t a) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) fail(ErrorKind::bad_params, "determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && a.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << m.at(i, j).get_str();
    }
  }
  return os << "]";
}

}  // namespace toral
