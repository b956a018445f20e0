#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sfs/continued_fraction.hpp"
#include "sfs/errors.hpp"
#include "sfs/matrix.hpp"
#include "sfs/rational.hpp"

namespace sfs {

// Chain M(m1, ..., mn): diagonal -m_i, unit off-diagonals. Entries are
// strict, or strict after a leading 1.
class TridiagSpec {
 public:
  explicit TridiagSpec(CFString entries) : entries_(std::move(entries)) {
    require(!entries_.empty(), "a chain needs at least one vertex");
    for (std::size_t i = 1; i < entries_.size(); ++i)
      require(entries_[i] >= 2, "chain entries after the first must be >= 2");
    require(entries_[0] >= 2 || entries_[0] == 1, "the first chain entry must be >= 2 or exactly 1");
  }

  const CFString& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  ExactMatrix matrix() const {
    const std::size_t n = size();
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = Rational(-entries_[i]);
      if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = Rational(1);
    }
    return m;
  }

  // Signed leading minors d_0 = 1, d_1, ..., d_n.
  std::vector<BigInt> leading_minors() const {
    const std::size_t n = size();
    std::vector<BigInt> d(n + 1);
    d[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      d[i] = -BigInt(static_cast<long>(entries_[i - 1])) * d[i - 1];
      if (i >= 2) d[i] -= d[i - 2];
    }
    return d;
  }

  // Signed trailing minors: e[j] is the determinant of the block on rows and
  // columns j..n-1 (0-based), with e[n] = 1.
  std::vector<BigInt> trailing_minors() const {
    const std::size_t n = size();
    std::vector<BigInt> e(n + 1);
    e[n] = 1;
    for (std::size_t j = n; j-- > 0;) {
      e[j] = -BigInt(static_cast<long>(entries_[j])) * e[j + 1];
      if (j + 2 <= n) e[j] -= e[j + 2];
    }
    return e;
  }

 private:
  CFString entries_;
};

struct UVVectors {
  std::vector<BigInt> u;  // u_0, ..., u_{n-1}
  std::vector<BigInt> v;  // v_{n-1}, ..., v_0
};

inline UVVectors uv_vectors(const TridiagSpec& s) {
  const std::size_t n = s.size();
  auto d = s.leading_minors();
  auto e = s.trailing_minors();
  UVVectors out;
  out.u.resize(n);
  out.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.u[i] = abs(d[i]);
  // v_k is the bottom-right k x k minor, which is e[n - k]; position i holds v_{n-1-i}.
  for (std::size_t i = 0; i < n; ++i) out.v[i] = abs(e[i + 1]);
  return out;
}

inline BigInt signed_det(const TridiagSpec& s) { return s.leading_minors().back(); }

inline Vector to_vector(const std::vector<BigInt>& xs, const Rational& scale = Rational(1)) {
  Vector out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(scale * Rational(x));
  return out;
}

struct EdgeColumns {
  Vector first;
  Vector last;
};

// First and last columns of M^{-1}: -(1/s) v and -(1/s) u with s = |det M|.
inline EdgeColumns inverse_edge_columns(const TridiagSpec& s) {
  BigInt det = signed_det(s);
  if (det == 0) throw SingularMatrix("chain " + s.entries().str() + " is singular");
  auto uv = uv_vectors(s);
  Rational scale = -Rational(BigInt(1), BigInt(abs(det)));
  return {to_vector(uv.v, scale), to_vector(uv.u, scale)};
}

// Inverse of a unit-off-diagonal tridiagonal matrix from its minors:
// (M^{-1})_{ij} = (-1)^{i+j} d_{i-1} e_{j+1} / d_n for i <= j (1-based).
inline ExactMatrix tridiag_inverse(const TridiagSpec& s) {
  const std::size_t n = s.size();
  auto d = s.leading_minors();
  auto e = s.trailing_minors();
  if (d[n] == 0) throw SingularMatrix("chain " + s.entries().str() + " is singular");
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      BigInt num = d[i] * e[j + 1];
      if ((i + j) % 2 == 1) num = -num;
      inv(i, j) = inv(j, i) = Rational(num, d[n]);
    }
  return inv;
}

struct DotIdentity {
  Rational lhs;  // first column of M^{-1} dotted with (m_i - 2)
  Rational rhs;  // -1 + (1 + t)/s
  BigInt det_m1;
  BigInt det_m1_expected;  // (-1)^{n+1} (s - t - 1)
  bool holds() const { return lhs == rhs && det_m1 == det_m1_expected; }
};

inline DotIdentity dot_identity_check(const TridiagSpec& s) {
  require(s.entries().is_strict(), "dot_identity_check needs a strict chain");
  const std::size_t n = s.size();
  Rational value = cf_evaluate(s.entries());
  BigInt sv = value.num(), tv = value.den();
  auto cols = inverse_edge_columns(s);
  Vector w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = Rational(s.entries()[i] - 2);
  DotIdentity out;
  out.lhs = dot(cols.first, w);
  out.rhs = Rational(-1) + Rational(1 + tv, sv);
  ExactMatrix m1 = s.matrix();
  for (std::size_t i = 0; i < n; ++i) m1(i, 0) = w[i];
  out.det_m1 = determinant(m1).num();
  out.det_m1_expected = sv - tv - 1;
  if (n % 2 == 0) out.det_m1_expected = -out.det_m1_expected;
  return out;
}

// Star-shaped plumbing with legs a1 (reversed into block A), the central
// chain a2ext = (a2_0, ..., a2_{n2}) as block B, and the dual of a1 as block C.
struct PlumbingQ {
  CFString a1;
  CFString a2ext;
  CFString a3;
  ExactMatrix matrix;

  std::size_t n1() const { return a1.size(); }
  std::size_t nb() const { return a2ext.size(); }
  std::size_t n3() const { return a3.size(); }
  std::size_t size() const { return n1() + nb() + n3(); }
  std::size_t off_b() const { return n1(); }
  std::size_t off_c() const { return n1() + nb(); }
};

inline PlumbingQ assemble_q(const CFString& a1, const CFString& a2ext) {
  require(!a1.empty() && a1.is_strict(), "a1 must be a nonempty strict string");
  require(!a2ext.empty() && a2ext.is_strict(), "a2ext must be a nonempty strict string");
  PlumbingQ q{a1, a2ext, riemenschneider_dual(a1), {}};
  q.matrix = ExactMatrix(q.size(), q.size());
  q.matrix.place(0, 0, TridiagSpec(a1.reversed()).matrix());
  q.matrix.place(q.off_b(), q.off_b(), TridiagSpec(a2ext).matrix());
  q.matrix.place(q.off_c(), q.off_c(), TridiagSpec(q.a3).matrix());
  const std::size_t center = q.off_b();
  q.matrix(center - 1, center) = q.matrix(center, center - 1) = Rational(1);
  q.matrix(center, q.off_c()) = q.matrix(q.off_c(), center) = Rational(1);
  return q;
}

struct BlockData {
  BigInt ptilde, qtilde, p, q;
  Vector uA, vB, vC;
  Rational g_scale;  // -q / (ptilde^2 (p - q)), used by G, E, H
  Rational d_scale;  // -1 / (ptilde (p - q)), used by D, F
};

inline BlockData block_data(const PlumbingQ& q) {
  BlockData b;
  Rational pt = cf_evaluate(q.a1);
  b.ptilde = pt.num();
  b.qtilde = pt.den();
  Rational pq = cf_evaluate(q.a2ext);
  b.p = pq.num();
  b.q = pq.den();
  if (b.p == b.q) throw SingularMatrix("p = q, the central block is degenerate");
  b.uA = to_vector(uv_vectors(TridiagSpec(q.a1.reversed())).u);
  b.vB = to_vector(uv_vectors(TridiagSpec(q.a2ext)).v);
  b.vC = to_vector(uv_vectors(TridiagSpec(q.a3)).v);
  BigInt pm = b.p - b.q;
  b.g_scale = -Rational(b.q, b.ptilde * b.ptilde * pm);
  b.d_scale = -Rational(BigInt(1), b.ptilde * pm);
  return b;
}

namespace detail {

inline ExactMatrix assemble_inverse(const PlumbingQ& q, bool with_edge_inverses) {
  BlockData b = block_data(q);
  ExactMatrix out(q.size(), q.size());
  ExactMatrix G = outer(b.uA, b.uA, b.g_scale);
  ExactMatrix D = outer(b.uA, b.vB, b.d_scale);
  ExactMatrix E = outer(b.uA, b.vC, b.g_scale);
  ExactMatrix F = outer(b.vB, b.vC, b.d_scale);
  ExactMatrix H = outer(b.vC, b.vC, b.g_scale);
  std::vector<std::int64_t> bt = q.a2ext.entries();
  bt[0] -= 1;
  ExactMatrix Binv = tridiag_inverse(TridiagSpec(CFString::from(bt)));
  if (with_edge_inverses) {
    G = G + tridiag_inverse(TridiagSpec(q.a1.reversed()));
    H = H + tridiag_inverse(TridiagSpec(q.a3));
  }
  out.place(0, 0, G);
  out.place(0, q.off_b(), D);
  out.place(0, q.off_c(), E);
  out.place(q.off_b(), 0, D.transpose());
  out.place(q.off_b(), q.off_b(), Binv);
  out.place(q.off_b(), q.off_c(), F);
  out.place(q.off_c(), 0, E.transpose());
  out.place(q.off_c(), q.off_b(), F.transpose());
  out.place(q.off_c(), q.off_c(), H);
  return out;
}

}  // namespace detail

inline ExactMatrix q_inverse_blocks(const PlumbingQ& q) { return detail::assemble_inverse(q, true); }

// The block inverse with A^{-1} and C^{-1} deleted from the diagonal.
inline ExactMatrix q_inverse_without_edge_blocks(const PlumbingQ& q) {
  return detail::assemble_inverse(q, false);
}

struct RowRelationReport {
  bool rows_relation = false;  // Qt[n1] + Qt[n1+n2+2] == Qt[n1+1] (1-based rows)
  bool product_shape = false;  // Q * Qt has the expected zero/identity/edge-row pattern
};

inline RowRelationReport appendix_row_relation(const PlumbingQ& q) {
  ExactMatrix qt = q_inverse_without_edge_blocks(q);
  RowRelationReport rep;
  const std::size_t last_a = q.n1() - 1, center = q.off_b(), first_c = q.off_c();
  rep.rows_relation = true;
  for (std::size_t j = 0; j < q.size(); ++j)
    if (qt(last_a, j) + qt(first_c, j) != qt(center, j)) rep.rows_relation = false;

  BlockData b = block_data(q);
  Rational inv_pt(BigInt(1), b.ptilde);
  ExactMatrix expected(q.size(), q.size());
  for (std::size_t i = 0; i < q.nb(); ++i) expected(q.off_b() + i, q.off_b() + i) = Rational(1);
  for (std::size_t j = 0; j < q.n1(); ++j) expected(center, j) = inv_pt * b.uA[j];
  for (std::size_t j = 0; j < q.n3(); ++j) expected(center, first_c + j) = inv_pt * b.vC[j];
  rep.product_shape = (q.matrix * qt) == expected;
  return rep;
}

}  // namespace sfs
