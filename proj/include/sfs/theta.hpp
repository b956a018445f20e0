#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sfs/continued_fraction.hpp"
#include "sfs/errors.hpp"
#include "sfs/matrix.hpp"
#include "sfs/plumbing.hpp"
#include "sfs/rational.hpp"

namespace sfs {

struct ThetaResult {
  Rational theta;
  Rational c1_squared;
  std::int64_t sigma = 0;
  std::int64_t chi = 0;
  Rational d3;

  friend bool operator==(const ThetaResult&, const ThetaResult&) = default;
};

inline ThetaResult theta_from_c1(const Rational& c1sq, std::int64_t sigma, std::int64_t chi) {
  ThetaResult r;
  r.c1_squared = c1sq;
  r.sigma = sigma;
  r.chi = chi;
  r.theta = c1sq - Rational(3 * sigma) - Rational(2 * chi);
  r.d3 = (r.theta + Rational(2)) / Rational(4);
  return r;
}

inline ThetaResult theta_from_theta(const Rational& theta, std::int64_t sigma, std::int64_t chi) {
  return theta_from_c1(theta + Rational(3 * sigma) + Rational(2 * chi), sigma, chi);
}

namespace detail {

inline std::int64_t plumbing_vertices(const CFString& a1, const CFString& a2ext) {
  return static_cast<std::int64_t>(a1.size() + a2ext.size() + riemenschneider_dual(a1).size());
}

// [a2_{n2}, ..., a2_1, a2_0 - 1]
inline CFString reversed_center_string(const CFString& a2ext) {
  std::vector<std::int64_t> r(a2ext.entries().rbegin(), a2ext.entries().rend());
  r.back() -= 1;
  return CFString::from(std::move(r));
}

inline void check_plumbing_input(const CFString& a1, const CFString& a2ext) {
  require(!a1.empty() && a1.is_strict(), "a1 must be a nonempty strict string");
  require(!a2ext.empty() && a2ext.is_strict(), "a2ext must be a nonempty strict string");
}

}  // namespace detail

// Closed form for theta of the canonical contact structure on the boundary of
// the star-shaped plumbing.
inline ThetaResult theta_canonical_formula(const CFString& a1, const CFString& a2ext) {
  detail::check_plumbing_input(a1, a2ext);
  Rational pt = cf_evaluate(a1);
  Rational pq = cf_evaluate(a2ext);
  Rational ptilde(pt.num()), p(pq.num()), q(pq.den());
  Rational pm = p - q;
  Rational two(2);
  Rational theta = Rational(1) - Rational(i_value(a2ext)) -
                   cf_reciprocal(detail::reversed_center_string(a2ext)) +
                   two * (ptilde - two) / (ptilde * pm) -
                   (ptilde - two) * (ptilde - two) * q / (ptilde * ptilde * pm);
  const std::int64_t n = detail::plumbing_vertices(a1, a2ext);
  return theta_from_theta(theta, -n, n + 1);
}

// Rotation-vector parts for the canonical structure; x lives on the central
// chain, y on the two complementary legs.
struct RotationParts {
  Vector x, y_a1, y_a3;
  Vector y() const {
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = y_a1[i] + y_a3[i];
    return out;
  }
  Vector r_can() const {
    Vector yy = y();
    for (std::size_t i = 0; i < x.size(); ++i) yy[i] += x[i];
    return yy;
  }
};

inline RotationParts rotation_parts(const PlumbingQ& q) {
  RotationParts r;
  r.x.assign(q.size(), Rational(0));
  r.y_a1 = r.x;
  r.y_a3 = r.x;
  for (std::size_t i = 0; i < q.n1(); ++i) r.y_a1[i] = Rational(q.a1[q.n1() - 1 - i] - 2);
  for (std::size_t i = 0; i < q.nb(); ++i) r.x[q.off_b() + i] = Rational(q.a2ext[i] - 2);
  for (std::size_t i = 0; i < q.n3(); ++i) r.y_a3[q.off_c() + i] = Rational(q.a3[i] - 2);
  return r;
}

inline ThetaResult theta_canonical_matrix(const CFString& a1, const CFString& a2ext) {
  detail::check_plumbing_input(a1, a2ext);
  PlumbingQ q = assemble_q(a1, a2ext);
  Vector r = rotation_parts(q).r_can();
  Rational c1sq = bilinear(r, q_inverse_direct(q.matrix), r);
  const auto n = static_cast<std::int64_t>(q.size());
  return theta_from_c1(c1sq, -n, n + 1);
}

struct ProofQuantities {
  Rational alpha;
  Rational beta;
  Vector x;
  Vector y;
  BigInt qstar_tilde;
};

inline ProofQuantities proof_quantities(const PlumbingQ& q) {
  Rational pt = cf_evaluate(q.a1);
  BigInt ptilde = pt.num(), qtilde = pt.den();
  ProofQuantities out;
  out.alpha = Rational(-1) + Rational(1 + qtilde, ptilde);
  out.beta = Rational(1 - qtilde, ptilde);
  auto parts = rotation_parts(q);
  out.x = parts.x;
  out.y = parts.y();
  out.qstar_tilde = mod_inverse<BigInt>(qtilde, ptilde);
  return out;
}

struct NamedIdentity {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

// Both sides of every intermediate identity used to derive the closed form,
// with the left sides evaluated through the exact (eliminated) inverse.
inline std::vector<NamedIdentity> proof_lemma_checks(const CFString& a1, const CFString& a2ext) {
  detail::check_plumbing_input(a1, a2ext);
  PlumbingQ q = assemble_q(a1, a2ext);
  ExactMatrix qi = q_inverse_direct(q.matrix);
  ProofQuantities pqs = proof_quantities(q);
  RotationParts parts = rotation_parts(q);
  const Rational& a = pqs.alpha;
  const Rational& b = pqs.beta;
  Rational pt = cf_evaluate(a1);
  Rational ptilde(pt.num()), qtilde(pt.den()), qstar(pqs.qstar_tilde);
  Rational pq = cf_evaluate(a2ext);
  Rational p(pq.num()), qq(pq.den());
  Rational ratio = qq / (p - qq);
  Rational one(1), two(2);
  Rational tail = one - one / (p - qq);
  Rational n1(static_cast<std::int64_t>(q.n1())), n3(static_cast<std::int64_t>(q.n3()));
  Rational sum_a2;
  for (auto v : a2ext.entries()) sum_a2 += Rational(v);
  Rational n2(static_cast<std::int64_t>(q.nb()) - 1);
  Rational ptm = (ptilde - two) / ptilde;

  std::vector<NamedIdentity> out;
  out.push_back({"alpha_plus_beta", a + b, (two - ptilde) / ptilde});
  out.push_back({"x_Qinv_x", bilinear(parts.x, qi, parts.x),
                 two * n2 + Rational(3) - sum_a2 - cf_reciprocal(detail::reversed_center_string(a2ext))});
  out.push_back({"y_a1_Qinv_x", bilinear(parts.y_a1, qi, parts.x), a * tail});
  out.push_back({"y_a3_Qinv_x", bilinear(parts.y_a3, qi, parts.x), b * tail});
  out.push_back({"x_Qinv_y", bilinear(parts.x, qi, pqs.y), (a + b) * tail});
  out.push_back({"y_a1_Qinv_y_a3", bilinear(parts.y_a1, qi, parts.y_a3), -a * b * ratio});
  out.push_back({"y_a1_Qinv_y_a1", bilinear(parts.y_a1, qi, parts.y_a1),
                 -two * a - a * a * ratio - (n3 - one) + (qtilde - qstar) / ptilde});
  out.push_back({"y_a3_Qinv_y_a3", bilinear(parts.y_a3, qi, parts.y_a3),
                 -two * b - b * b * ratio - (n1 - one) + (qstar - qtilde) / ptilde});
  out.push_back({"y_Qinv_y", bilinear(pqs.y, qi, pqs.y), two * ptm - (n1 + n3 - two) - ptm * ptm * ratio});
  return out;
}

// theta of the canonical structure on the lens space bounding the linear
// plumbing of [s]; the empty string stands for S^3 with theta = -2.
inline Rational theta_lens_canonical(const CFString& s) {
  if (s.empty()) return Rational(-2);
  require(s.is_strict(), "lens-space theta needs a strict string");
  TridiagSpec t(s);
  Vector r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = Rational(s[i] - 2);
  Rational c1sq = bilinear(r, q_inverse_direct(t.matrix()), r);
  const auto n = static_cast<std::int64_t>(s.size());
  return theta_from_c1(c1sq, -n, n + 1).theta;
}

// -(2 + q + q*)/p - I(p/q)
inline Rational theta_lens_closed_form(const CFString& s) {
  if (s.empty()) return Rational(-2);
  Rational v = cf_evaluate(s);
  BigInt p = v.num(), q = v.den();
  BigInt qs = mod_inverse<BigInt>(q, p);
  return -Rational(2 + q + qs, p) - Rational(i_value(s));
}

enum class ContactSign { Plus, Minus };

struct NonbalancedReport {
  Rational theta_minus;
  Rational theta_plus;
  Rational theta_plus_via_rs;  // -I(r/s) - F - G
  Rational fraction;           // ((e0+1)p' + q') / ((e0+1)p + q)
  Rational fraction_via_cf;    // 1/[a_k, ..., a_2, a_1 + 1, 2 x e0]
  Rational twisted_coefficient;           // -p / ((e0+1)p + q)
  Rational twisted_coefficient_via_cf;    // -1 + 1/[2 x e0, a_1 + 1, a_2, ..., a_k]
  CFString rs;                 // [2 x e0, a_1 + 1, a_2, ..., a_k]
  bool consistent() const {
    return theta_plus == theta_plus_via_rs && fraction == fraction_via_cf &&
           twisted_coefficient == twisted_coefficient_via_cf;
  }
};

inline NonbalancedReport nonbalanced_report(std::int64_t e0, const Rational& pq) {
  require(e0 >= 0, "non-balanced theta needs e0 >= 0");
  require(pq > Rational(1), "non-balanced theta needs p/q > 1");
  CFString a = cf_expand(pq);
  const auto k = static_cast<std::int64_t>(a.size());
  BigInt p = pq.num(), q = pq.den();
  BigInt pp = 1, qp = 0;
  if (k > 1) {
    Rational conv = cf_evaluate(a.prefix(a.size() - 1));
    pp = conv.num();
    qp = conv.den();
  }
  std::int64_t sum = 0;
  for (auto v : a.entries()) sum += v;
  BigInt e1(static_cast<long>(e0 + 1));
  BigInt den = e1 * p + q;
  NonbalancedReport r;
  r.fraction = Rational(e1 * pp + qp, den);
  Rational g(BigInt(static_cast<long>(e0 - 3)) * p + q + 4, den);
  r.theta_minus = -Rational(sum - (3 * k + e0 - 2)) - r.fraction;
  r.theta_plus = -Rational(sum - (3 * k + e0 - 1)) - r.fraction - g;

  std::vector<std::int64_t> rs(static_cast<std::size_t>(e0), 2);
  rs.insert(rs.end(), a.entries().begin(), a.entries().end());
  rs[static_cast<std::size_t>(e0)] += 1;
  r.rs = CFString::strict(rs);
  r.theta_plus_via_rs = -Rational(i_value(r.rs)) - r.fraction - g;
  r.fraction_via_cf = cf_reciprocal(r.rs.reversed());
  r.twisted_coefficient = -Rational(p, den);
  r.twisted_coefficient_via_cf = Rational(-1) + cf_reciprocal(r.rs);
  return r;
}

inline Rational theta_nonbalanced(std::int64_t e0, const Rational& pq, ContactSign sign) {
  NonbalancedReport r = nonbalanced_report(e0, pq);
  return sign == ContactSign::Plus ? r.theta_plus : r.theta_minus;
}

}  // namespace sfs
