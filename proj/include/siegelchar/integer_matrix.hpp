#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace siegelchar {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const IntMatrix& src);

  bool is_symmetric() const;
  bool is_identity() const;
  // true iff every entry of (*this - I) is divisible by modulus
  bool congruent_to_identity(unsigned long modulus) const;

  IntMatrix& operator+=(const IntMatrix& rhs);
  IntMatrix& operator-=(const IntMatrix& rhs);

  friend bool operator==(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs) { return lhs += rhs; }
  friend IntMatrix operator-(IntMatrix lhs, const IntMatrix& rhs) { return lhs -= rhs; }
  friend IntMatrix operator-(const IntMatrix& m);
  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator*(const Integer& k, const IntMatrix& m);
  friend IntVector operator*(const IntMatrix& m, const IntVector& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

IntVector operator+(const IntVector& lhs, const IntVector& rhs);
IntVector operator-(const IntVector& lhs, const IntVector& rhs);
Integer dot(const IntVector& lhs, const IntVector& rhs);

// Non-negative residue of x modulo a positive modulus.
unsigned long residue(const Integer& x, unsigned long modulus);

}  // namespace siegelchar
