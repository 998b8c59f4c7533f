#include "nilrep/int_matrix.hpp"

#include <ostream>
#include <utility>

#include "nilrep/error.hpp"

namespace nilrep {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_)
      throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    for (long v : row)
      data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer &factor) {
  if (factor == 0)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer &factor) {
  if (factor == 0)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(r, j) = -(*this)(r, j);
}

bool IntMatrix::is_zero() const {
  for (const auto &v : data_)
    if (v != 0)
      return false;
  return true;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorKind::InvalidArgument, "matrix dimension mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer &aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix &a, const IntMatrix &b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Integer determinant(const IntMatrix &input) {
  if (input.rows() != input.cols())
    throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0)
    return 1;
  IntMatrix m = input;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rational_rank(IntMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0)
      ++pivot;
    if (pivot == m.rows())
      continue;
    m.swap_rows(rank, pivot);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0)
        continue;
      const Integer a = m(rank, col);
      const Integer b = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = a * m(i, j) - b * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

} // namespace nilrep
