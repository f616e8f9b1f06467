#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "daggerkit/scalar.hpp"

namespace dk {

/// Dense matrix over Q(i), row-major. All arithmetic is exact.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix conjugate() const;
  Matrix conjTranspose() const { return conjugate().transpose(); }

  /// Plain Kronecker product, row index (i,k) = i*other.rows()+k.
  Matrix kron(const Matrix& other) const;

  /// Gauss-Jordan inverse; throws NotInvertible on a singular matrix.
  Matrix inverse() const;
  bool isInvertible() const;

  bool isZero() const;
  bool isIdentity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  Matrix operator-() const { return Scalar(-1) * *this; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace dk
