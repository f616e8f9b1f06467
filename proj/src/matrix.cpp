#include "daggerkit/matrix.hpp"

#include <ostream>

#include "daggerkit/errors.hpp"

namespace dk {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged initializer");
    for (const auto& x : row) a_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::conjugate() const {
  Matrix c(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) c.at(i, j) = conj(at(i, j));
  return c;
}

Matrix Matrix::kron(const Matrix& other) const {
  Matrix k(rows_ * other.rows_, cols_ * other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j).isZero()) continue;
      for (std::size_t r = 0; r < other.rows_; ++r)
        for (std::size_t c = 0; c < other.cols_; ++c)
          k.at(i * other.rows_ + r, j * other.cols_ + c) = at(i, j) * other.at(r, c);
    }
  return k;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw NotInvertible("not square");
  std::size_t n = rows_;
  Matrix work(*this);
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).isZero()) ++pivot;
    if (pivot == n) throw NotInvertible("zero pivot column");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Scalar d = work.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work.at(i, col).isZero()) continue;
      Scalar f = work.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(i, j) -= f * work.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool Matrix::isInvertible() const {
  if (rows_ != cols_) return false;
  try {
    (void)inverse();
    return true;
  } catch (const NotInvertible&) {
    return false;
  }
}

bool Matrix::isZero() const {
  for (const auto& x : a_)
    if (!x.isZero()) return false;
  return true;
}

bool Matrix::isIdentity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? Scalar(1) : Scalar(0))) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.isZero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).isZero()) continue;
        p.at(i, j) += x * b.at(k, j);
      }
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum");
  Matrix s(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) s.a_[i] = a.a_[i] + b.a_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference");
  Matrix s(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) s.a_[i] = a.a_[i] - b.a_[i];
  return s;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix p(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) p.a_[i] = s * a.a_[i];
  return p;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m.at(i, j);
    }
    os << "]\n";
  }
  return os;
}

}  // namespace dk
