#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfs/continued_fraction.hpp"
#include "sfs/errors.hpp"
#include "sfs/lisca.hpp"
#include "sfs/rational.hpp"

namespace sfs {

// Normalized invariants Y(e0; r1, r2, r3) with every r_i in (0,1). When two
// legs are complementary they sit in positions 0 and 2, smaller one first.
struct SeifertData {
  std::int64_t e0 = 0;
  std::array<Rational, 3> r;
  std::array<int, 3> original_order{0, 1, 2};  // r[k] was input coefficient original_order[k]

  bool complementary() const { return r[0] + r[2] == Rational(1); }
  bool rational_homology_sphere() const { return (Rational(e0) + r[0] + r[1] + r[2]).sign() != 0; }

  std::string str() const {
    return "Y(" + std::to_string(e0) + "; " + r[0].str() + ", " + r[1].str() + ", " + r[2].str() + ")";
  }

  friend bool operator==(const SeifertData& a, const SeifertData& b) { return a.e0 == b.e0 && a.r == b.r; }
  friend bool operator<(const SeifertData& a, const SeifertData& b) {
    if (a.e0 != b.e0) return a.e0 < b.e0;
    return a.r < b.r;
  }
};

inline SeifertData normalize(std::int64_t e, const std::array<Rational, 3>& coeffs) {
  SeifertData y;
  y.e0 = e;
  for (int i = 0; i < 3; ++i) {
    if (coeffs[i].is_integer())
      throw DomainError("coefficient " + coeffs[i].str() + " is integral; not a small Seifert fibered space");
    BigInt f = coeffs[i].floor();
    y.r[i] = coeffs[i] - Rational(f);
    y.e0 = to_int64(BigInt(static_cast<long>(y.e0)) + f);
  }
  static constexpr std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (auto [i, j] : pairs) {
    if (y.r[i] + y.r[j] != Rational(1)) continue;
    int k = 3 - i - j;
    if (y.r[j] < y.r[i]) std::swap(i, j);
    SeifertData out;
    out.e0 = y.e0;
    out.r = {y.r[i], y.r[k], y.r[j]};
    out.original_order = {i, k, j};
    return out;
  }
  return y;
}

inline SeifertData parse_seifert(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (c != ' ' && c != '\t') text.push_back(c);
  auto semi = text.find(';');
  if (semi == std::string::npos) throw DomainError("Seifert data must look like 'e0;r1,r2,r3'");
  Rational e = Rational::parse(text.substr(0, semi));
  if (!e.is_integer()) throw DomainError("e0 must be an integer");
  std::array<Rational, 3> rs;
  std::string rest = text.substr(semi + 1);
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    auto comma = rest.find(',', pos);
    if ((i < 2) == (comma == std::string::npos)) throw DomainError("Seifert data needs exactly three coefficients");
    rs[i] = Rational::parse(rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    pos = comma + 1;
  }
  return normalize(to_int64(e.num()), rs);
}

inline void require_complementary(const SeifertData& y) {
  require(y.complementary(), y.str() + " has no complementary legs");
}

struct LegStructure {
  std::array<CFString, 3> legs;
  std::optional<std::pair<int, int>> complementary_pair;
  bool uniquely_complementary = false;
};

inline LegStructure leg_structure(const SeifertData& y) {
  LegStructure ls;
  for (int i = 0; i < 3; ++i) ls.legs[i] = cf_expand(y.r[i].reciprocal());
  if (!y.complementary()) return ls;
  ls.complementary_pair = std::make_pair(0, 2);
  bool sublegs_match = false;
  const CFString& mid = ls.legs[1];
  for (std::size_t k = 1; k <= mid.size() && !sublegs_match; ++k) {
    CFString d = riemenschneider_dual(mid.prefix(k));
    for (int side : {0, 2}) {
      const CFString& leg = ls.legs[side];
      if (d.size() <= leg.size() && leg.prefix(d.size()) == d) sublegs_match = true;
    }
  }
  ls.uniquely_complementary = !sublegs_match;
  return ls;
}

// Integer surgery picture: central framing plus three fibers with framings
// -1/r_i. A Rolfsen twist by t moves t between a fiber and the center.
struct SurgeryDiagram {
  std::int64_t central = 0;
  std::array<Rational, 3> r;

  static SurgeryDiagram of(const SeifertData& y) { return {y.e0, y.r}; }
  void twist(int leg, std::int64_t t) {
    r[leg] += Rational(t);
    central -= t;
  }
  Rational framing(int leg) const { return -r[leg].reciprocal(); }
};

struct Figure2Form {
  Rational ab;         // a/b > 1, so the complementary legs are b/a and 1 - b/a
  std::int64_t n = 0;  // the central curve is (-n)-framed
  CFString a2string;   // empty when the chain degenerates (lens space S^3)

  bool empty_chain() const { return a2string.empty(); }
  friend bool operator==(const Figure2Form& a, const Figure2Form& b) {
    return a.ab == b.ab && a.n == b.n && a.a2string == b.a2string;
  }
};

// Rolfsen twists on the middle leg only, until the center is -1-framed.
inline Rational middle_framing_direct(const SeifertData& y) {
  SurgeryDiagram d = SurgeryDiagram::of(y);
  d.twist(1, y.e0 + 1);
  if (d.central != -1) throw std::logic_error("middle twist did not reach central framing -1");
  return d.framing(1);
}

// Twist the third leg into an a/b fiber, move the center to 0 through the
// middle leg, then undo the first twist.
inline Rational middle_framing_via_s1s2(const SeifertData& y) {
  SurgeryDiagram d = SurgeryDiagram::of(y);
  d.twist(2, -1);
  if (d.framing(2) != y.r[0].reciprocal()) throw std::logic_error("third leg did not become an a/b fiber");
  d.twist(1, d.central);
  if (d.central != 0) throw std::logic_error("center did not reach framing 0");
  d.twist(2, 1);
  if (d.central != -1) throw std::logic_error("center did not return to framing -1");
  return d.framing(1);
}

inline Figure2Form to_figure2(const SeifertData& y) {
  require_complementary(y);
  Figure2Form f;
  f.ab = y.r[0].reciprocal();
  FramingSplit s = split_integer_part(middle_framing_via_s1s2(y));
  f.n = s.n;
  f.a2string = s.tail;
  return f;
}

inline SeifertData from_figure2(const Figure2Form& f) {
  require(f.ab > Rational(1), "a/b must exceed 1");
  require(f.a2string.empty() || f.a2string.is_strict(), "the chain must be strict");
  Rational x = Rational(-f.n) + cf_reciprocal(f.a2string);
  if (x.sign() == 0) throw DomainError("n = 0 with an empty chain is not a Seifert fibered space");
  Rational r2 = -x.reciprocal();
  Rational r1 = f.ab.reciprocal();
  return normalize(-1, {r1, r2, Rational(1) - r1});
}

struct PlumbingStrings {
  CFString a1;
  CFString a2ext;
};

inline PlumbingStrings seifert_to_plumbing(const SeifertData& y) {
  require_complementary(y);
  require(y.e0 <= -2, "the plumbing encoding needs e0 <= -2");
  PlumbingStrings out;
  out.a1 = cf_expand(y.r[0].reciprocal());
  std::vector<std::int64_t> a2{-y.e0};
  CFString mid = cf_expand(y.r[1].reciprocal());
  a2.insert(a2.end(), mid.entries().begin(), mid.entries().end());
  out.a2ext = CFString::strict(std::move(a2));
  return out;
}

inline SeifertData plumbing_to_seifert(const CFString& a1, const CFString& a2ext) {
  require(!a1.empty() && a1.is_strict(), "a1 must be a nonempty strict string");
  require(a2ext.is_strict(), "a2ext must be strict");
  require(a2ext.size() >= 2, "a2ext needs a middle leg after its central entry");
  std::vector<std::int64_t> mid(a2ext.entries().begin() + 1, a2ext.entries().end());
  Rational r1 = cf_evaluate(a1).reciprocal();
  Rational r2 = cf_evaluate(CFString::strict(mid)).reciprocal();
  return normalize(-a2ext[0], {r1, r2, Rational(1) - r1});
}

inline SeifertData reverse_orientation(const SeifertData& y) {
  return normalize(-3 - y.e0, {Rational(1) - y.r[0], Rational(1) - y.r[1], Rational(1) - y.r[2]});
}

// D(p, q) or -D(p, q).
struct DihedralParams {
  BigInt p;
  BigInt q;
  bool reversed = false;
  friend bool operator==(const DihedralParams&, const DihedralParams&) = default;
};

inline bool is_dihedral_shape(const SeifertData& y) {
  Rational half(BigInt(1), BigInt(2));
  return y.r[0] == half && y.r[2] == half;
}

inline DihedralParams dihedral_from_seifert(const SeifertData& y) {
  require(is_dihedral_shape(y), y.str() + " is not of the form Y(e0; 1/2, s, 1/2)");
  const Rational& s = y.r[1];
  Rational v = y.e0 <= -2 ? Rational(-y.e0) - s : Rational(y.e0 + 2) + s;
  return {v.num(), v.den(), y.e0 >= -1};
}

inline SeifertData seifert_from_dihedral(const DihedralParams& d) {
  require(d.q > 0 && d.p > d.q, "D(p, q) needs 0 < q < p");
  Rational v(d.p, d.q);
  require(!v.is_integer(), "D(p, q) needs q not dividing p");
  Rational half(BigInt(1), BigInt(2));
  if (!d.reversed) {
    BigInt c = v.ceil();
    return normalize(to_int64(-c), {half, Rational(c) - v, half});
  }
  BigInt f = v.floor();
  return normalize(to_int64(f - 2), {half, v - Rational(f), half});
}

inline std::int64_t unique_e0(std::int64_t m, std::int64_t h) {
  require(0 < h && h < m, "unique_e0 needs 0 < h < m");
  const std::int64_t b = m * m - m * h + 1;
  const std::int64_t e0 = (m * m) / b - 1;
  if (!((e0 + 1) * b < m * m && m * m < (e0 + 2) * b))
    throw std::logic_error("unique_e0: double inequality failed");
  return e0;
}

inline bool mhn_admissible(std::int64_t m, std::int64_t h, std::int64_t n) {
  if (m == 1 && h == 0) return n >= 1;
  return 0 < h && h < m && std::gcd(h, m) == 1 && n >= 1;
}

inline SeifertData y_mhn(std::int64_t m, std::int64_t h, std::int64_t n) {
  require(mhn_admissible(m, h, n), "Y_{m,h,n} needs coprime 0 < h < m (or m = 1, h = 0) and n >= 1");
  Rational half(BigInt(1), BigInt(2));
  const std::int64_t m2 = m * m;
  if (n == 1 && h > 0) {
    const std::int64_t e0 = unique_e0(m, h);
    const std::int64_t b = m2 - m * h + 1;
    Rational s(BigInt(static_cast<long>(m2 - (e0 + 1) * b)), BigInt(static_cast<long>(b)));
    return normalize(e0, {half, s, half});
  }
  Rational s(BigInt(static_cast<long>(m2)), BigInt(static_cast<long>(n * m2 - m * h + 1)));
  return normalize(-1, {half, s, half});
}

// -D((n+1)m^2 - mh + 1, nm^2 - mh + 1), which also covers n = 1.
inline DihedralParams y_mhn_dihedral(std::int64_t m, std::int64_t h, std::int64_t n) {
  require(mhn_admissible(m, h, n), "Y_{m,h,n} needs coprime 0 < h < m (or m = 1, h = 0) and n >= 1");
  const long m2 = static_cast<long>(m * m);
  return {BigInt((n + 1) * m2 - m * h + 1), BigInt(n * m2 - m * h + 1), true};
}

struct MHNForm {
  std::int64_t m = 0;
  std::int64_t h = 0;
  std::int64_t n = 0;
  friend bool operator==(const MHNForm&, const MHNForm&) = default;
};

// Middle leg r2 = m^2 / (n m^2 - m h + 1) with coprime 0 < h < m, n >= 2,
// or m = 1, h = 0, n >= 1.
inline std::optional<MHNForm> recognize_minus_one_form(const Rational& r2) {
  const std::int64_t p2 = to_int64(r2.num()), q2 = to_int64(r2.den());
  auto m = exact_sqrt(p2);
  if (!m) return std::nullopt;
  const std::int64_t m2 = p2;
  std::int64_t c = ((1 - q2) % m2 + m2) % m2;
  if (c % *m != 0) return std::nullopt;
  const std::int64_t h = c / *m;
  const std::int64_t num = q2 + *m * h - 1;
  if (num % m2 != 0) return std::nullopt;
  const std::int64_t n = num / m2;
  if (*m == 1) {
    if (h != 0 || n < 1) return std::nullopt;
  } else if (h <= 0 || h >= *m || std::gcd(h, *m) != 1 || n < 2) {
    return std::nullopt;
  }
  return MHNForm{*m, h, n};
}

// Middle leg s = (m^2 - (e0+1)B)/B with B = m^2 - mh + 1 and e0 the unique
// value for (m, h).
inline std::optional<MHNForm> recognize_nonneg_form(std::int64_t e0, const Rational& s) {
  if (e0 < 0) return std::nullopt;
  const std::int64_t p2 = to_int64(s.num()), q2 = to_int64(s.den());
  const std::int64_t m2 = p2 + (e0 + 1) * q2;
  auto m = exact_sqrt(m2);
  if (!m) return std::nullopt;
  const std::int64_t hm = m2 + 1 - q2;
  if (hm % *m != 0) return std::nullopt;
  const std::int64_t h = hm / *m;
  if (h <= 0 || h >= *m || std::gcd(h, *m) != 1) return std::nullopt;
  if (unique_e0(*m, h) != e0) return std::nullopt;
  return MHNForm{*m, h, 1};
}

struct Section6Report {
  std::int64_t p = 0, q = 0, p_prime = 0, q_prime = 0;
  bool inverse_ok = false;     // p' q == 1 mod p
  bool eq5_ok = false;         // p - 2 == (e0+1) p' + q'
  std::optional<bool> convergent_ok;  // p'/q' == [a_1, ..., a_{k-1}] when p > q
};

inline Section6Report section6_identities(std::int64_t m, std::int64_t h, std::int64_t e0) {
  require(0 < h && h < m && std::gcd(h, m) == 1, "section-6 identities need coprime 0 < h < m");
  Section6Report r;
  r.p = m * m - (m * h - 1);
  r.q = (e0 + 1) * (m * h - 1) - e0 * m * m;
  require(r.q > 0, "section-6 identities need q > 0");
  r.p_prime = (m - h) * (m - h);
  r.q_prime = (2 * e0 + 1) * m * h - (e0 + 1) * h * h - e0 * m * m - 1;
  r.inverse_ok = ((r.p_prime % r.p) * (r.q % r.p)) % r.p == 1 % r.p;
  r.eq5_ok = r.p - 2 == (e0 + 1) * r.p_prime + r.q_prime;
  if (r.p > r.q) {
    CFString a = cf_expand(Rational(BigInt(static_cast<long>(r.p)), BigInt(static_cast<long>(r.q))));
    Rational want = a.size() > 1 ? cf_evaluate(a.prefix(a.size() - 1)) : Rational(0);
    bool ok = a.size() > 1 ? (r.q_prime != 0 && want == Rational(BigInt(static_cast<long>(r.p_prime)),
                                                                 BigInt(static_cast<long>(r.q_prime))))
                           : (r.p_prime == 1 && r.q_prime == 0);
    r.convergent_ok = ok;
  }
  return r;
}

}  // namespace sfs
