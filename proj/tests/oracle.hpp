#pragma once

// Slow, independent reference computations used as test oracles.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "sfs/matrix.hpp"
#include "sfs/rational.hpp"

namespace oracle {

using sfs::ExactMatrix;
using sfs::Rational;

// Right-to-left evaluation of a0 - 1/(a1 - 1/(...)) over plain integers.
inline std::pair<std::int64_t, std::int64_t> cf_value(const std::vector<std::int64_t>& a) {
  std::int64_t num = a.back(), den = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    // a_i - den/num
    std::int64_t n2 = a[i] * num - den;
    den = num;
    num = n2;
    std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den < 0) num = -num, den = -den;
  return {num, den};
}

inline Rational cf_rational(const std::vector<std::int64_t>& a) {
  auto [n, d] = cf_value(a);
  return Rational(sfs::BigInt(n), sfs::BigInt(d));
}

inline ExactMatrix minor_of(const ExactMatrix& m, std::size_t r, std::size_t c) {
  ExactMatrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == c) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

// Cofactor expansion along the first row; fine for the small sizes used here.
inline Rational det_laplace(const ExactMatrix& m) {
  if (m.rows() == 0) return Rational(1);
  if (m.rows() == 1) return m(0, 0);
  Rational total;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(0, j).sign() == 0) continue;
    Rational term = m(0, j) * det_laplace(minor_of(m, 0, j));
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

inline ExactMatrix adjugate_inverse(const ExactMatrix& m) {
  Rational det = det_laplace(m);
  ExactMatrix inv(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational c = det_laplace(minor_of(m, j, i));
      inv(i, j) = ((i + j) % 2 ? -c : c) / det;
    }
  return inv;
}

inline ExactMatrix from_ints(const std::vector<std::vector<std::int64_t>>& rows) {
  ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Rational(rows[i][j]);
  return m;
}

inline Rational frac(std::int64_t p, std::int64_t q) { return Rational(sfs::BigInt(p), sfs::BigInt(q)); }

}  // namespace oracle
