#include "siegelchar/integer_matrix.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

#include "siegelchar/error.hpp"

namespace siegelchar {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::BadShape, "ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                           std::size_t ncols) const {
  assert(row0 + nrows <= rows_ && col0 + ncols <= cols_);
  IntMatrix out(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  return out;
}

void IntMatrix::set_block(std::size_t row0, std::size_t col0, const IntMatrix& src) {
  assert(row0 + src.rows_ <= rows_ && col0 + src.cols_ <= cols_);
  for (std::size_t i = 0; i < src.rows_; ++i)
    for (std::size_t j = 0; j < src.cols_; ++j) (*this)(row0 + i, col0 + j) = src(i, j);
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_identity() const { return congruent_to_identity(0); }

bool IntMatrix::congruent_to_identity(unsigned long modulus) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      Integer x = (*this)(i, j);
      if (i == j) x -= 1;
      if (modulus == 0 ? x != 0 : residue(x, modulus) != 0) return false;
    }
  }
  return true;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::BadShape, "matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::BadShape, "matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

bool operator==(const IntMatrix& lhs, const IntMatrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
}

IntMatrix operator-(const IntMatrix& m) {
  IntMatrix out = m;
  for (auto& x : out.data_) x = -x;
  return out;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw Error(ErrorKind::BadShape, "matrix product shape mismatch");
  IntMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Integer& x = lhs(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += x * rhs(k, j);
    }
  }
  return out;
}

IntMatrix operator*(const Integer& k, const IntMatrix& m) {
  IntMatrix out = m;
  for (auto& x : out.data_) x *= k;
  return out;
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
  if (m.cols_ != v.size()) throw Error(ErrorKind::BadShape, "matrix-vector shape mismatch");
  IntVector out(m.rows_, Integer(0));
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) out[i] += m(i, j) * v[j];
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << ']';
}

IntVector operator+(const IntVector& lhs, const IntVector& rhs) {
  if (lhs.size() != rhs.size()) throw Error(ErrorKind::BadShape, "vector sum length mismatch");
  IntVector out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] + rhs[i];
  return out;
}

IntVector operator-(const IntVector& lhs, const IntVector& rhs) {
  if (lhs.size() != rhs.size())
    throw Error(ErrorKind::BadShape, "vector difference length mismatch");
  IntVector out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] - rhs[i];
  return out;
}

Integer dot(const IntVector& lhs, const IntVector& rhs) {
  if (lhs.size() != rhs.size()) throw Error(ErrorKind::BadShape, "dot product length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) s += lhs[i] * rhs[i];
  return s;
}

unsigned long residue(const Integer& x, unsigned long modulus) {
  return mpz_fdiv_ui(x.get_mpz_t(), modulus);
}

}  // namespace siegelchar
