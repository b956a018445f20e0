#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sfs/errors.hpp"
#include "sfs/rational.hpp"

namespace sfs {

using Vector = std::vector<Rational>;

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      require(rows[i].size() == m.cols_, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vector col(std::size_t j) const {
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  // Copies `block` into this matrix with its top-left corner at (r0, c0).
  void place(std::size_t r0, std::size_t c0, const ExactMatrix& block) {
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r0 + i, c0 + j) = block(i, j);
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    require(a.cols_ == b.rows_, "matrix shapes do not match for multiplication");
    ExactMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.sign() == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shapes do not match for addition");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline Vector operator*(const ExactMatrix& m, const Vector& v) {
  require(m.cols() == v.size(), "matrix-vector shape mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (v[j].sign() != 0) out[i] += m(i, j) * v[j];
  return out;
}

inline Rational dot(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "dot product of vectors with different lengths");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// x^T M y
inline Rational bilinear(const Vector& x, const ExactMatrix& m, const Vector& y) { return dot(x, m * y); }

// scale * a b^T
inline ExactMatrix outer(const Vector& a, const Vector& b, const Rational& scale) {
  ExactMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational ai = scale * a[i];
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = ai * b[j];
  }
  return m;
}

// Gauss-Jordan elimination over the rationals, pivoting on the first nonzero
// entry of each column.
inline ExactMatrix q_inverse_direct(const ExactMatrix& input) {
  require(input.square(), "only square matrices can be inverted");
  const std::size_t n = input.rows();
  ExactMatrix a = input;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).sign() == 0) ++piv;
    if (piv == n) throw SingularMatrix("matrix is singular");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    const Rational scale = a(c, c).reciprocal();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).sign() == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (a(c, j).sign() != 0) a(r, j) -= f * a(c, j);
        if (inv(c, j).sign() != 0) inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

inline Rational determinant(const ExactMatrix& input) {
  require(input.square(), "determinant needs a square matrix");
  const std::size_t n = input.rows();
  ExactMatrix a = input;
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).sign() == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = a(c, c).reciprocal();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).sign() == 0) continue;
      const Rational f = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace sfs
