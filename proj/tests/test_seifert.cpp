#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sfs/seifert.hpp"

using namespace sfs;
using oracle::frac;

namespace {

SeifertData Y(std::int64_t e0, Rational a, Rational b, Rational c) { return normalize(e0, {a, b, c}); }

const Rational half = frac(1, 2);

}  // namespace

TEST(Normalize, FoldsIntegerParts) {
  auto a = Y(-2, half, half, half);
  EXPECT_EQ(a.e0, -2);
  EXPECT_EQ(a.r, (std::array<Rational, 3>{half, half, half}));
  EXPECT_EQ(Y(-3, frac(3, 2), half, half), a);
  auto c = Y(0, frac(-1, 2), frac(1, 3), frac(1, 7));
  EXPECT_EQ(c.e0, -1);
  EXPECT_EQ(c.r, (std::array<Rational, 3>{half, frac(1, 3), frac(1, 7)}));
  EXPECT_FALSE(c.complementary());
}

TEST(Normalize, RejectsIntegralCoefficients) {
  EXPECT_THROW(Y(0, Rational(1), half, half), DomainError);
  EXPECT_THROW(Y(0, half, Rational(0), half), DomainError);
}

TEST(Normalize, MovesComplementaryPairOutward) {
  auto y = Y(-1, frac(1, 3), frac(2, 3), frac(1, 5));
  EXPECT_EQ(y.r, (std::array<Rational, 3>{frac(1, 3), frac(1, 5), frac(2, 3)}));
  EXPECT_EQ(y.original_order, (std::array<int, 3>{0, 2, 1}));
  // Either order of the complementary pair gives the same manifold.
  EXPECT_EQ(Y(-1, frac(2, 3), frac(1, 5), frac(1, 3)), y);
  EXPECT_TRUE(y.complementary());
  EXPECT_EQ(y.str(), "Y(-1; 1/3, 1/5, 2/3)");
}

TEST(Normalize, Parse) {
  EXPECT_EQ(parse_seifert("-2;1/2,1/3,1/2"), Y(-2, half, frac(1, 3), half));
  EXPECT_EQ(parse_seifert(" 0 ; 3/2 , 1/3, 1/2 "), Y(1, half, frac(1, 3), half));
  EXPECT_THROW(parse_seifert("0,1/2,1/2,1/2"), DomainError);
  EXPECT_THROW(parse_seifert("0;1/2,1/2"), DomainError);
  EXPECT_THROW(parse_seifert("1/2;1/2,1/2,1/2"), DomainError);
}

TEST(Normalize, RationalHomologySphere) {
  EXPECT_TRUE(Y(-1, half, half, half).rational_homology_sphere());
  EXPECT_FALSE(Y(-1, frac(1, 3), frac(1, 3), frac(1, 3)).rational_homology_sphere());
}

TEST(SurgeryForm, SmallExamples) {
  auto m2 = Y(-1, half, half, half);
  auto f = to_figure2(m2);
  EXPECT_EQ(f.ab, Rational(2));
  EXPECT_EQ(from_figure2(f), m2);
  EXPECT_LE(to_figure2(Y(-2, half, half, half)).n, -1);
  EXPECT_EQ(to_figure2(Y(0, frac(1, 3), frac(2, 5), frac(2, 3))).n, 1);
}

TEST(SurgeryForm, TwistPathsAgree) {
  for (auto l1 : strict_strings(3, 5))
    for (auto l2 : strict_strings(2, 5))
      for (std::int64_t e0 = -4; e0 <= 4; ++e0) {
        Rational r1 = cf_evaluate(l1).reciprocal();
        auto y = Y(e0, r1, cf_evaluate(l2).reciprocal(), Rational(1) - r1);
        ASSERT_EQ(middle_framing_direct(y), middle_framing_via_s1s2(y)) << y.str();
        ASSERT_EQ(from_figure2(to_figure2(y)), y) << y.str();
      }
}

TEST(SurgeryForm, Validation) {
  EXPECT_THROW(to_figure2(Y(-1, half, frac(1, 3), frac(1, 5))), DomainError);
  EXPECT_THROW(from_figure2({Rational(2), 0, CFString()}), DomainError);
  EXPECT_THROW(from_figure2({half, 2, CFString()}), DomainError);
}

TEST(Plumbing, Encoding) {
  auto p = seifert_to_plumbing(Y(-2, half, half, half));
  EXPECT_EQ(p.a1, CFString::strict({2}));
  EXPECT_EQ(p.a2ext, CFString::strict({2, 2}));
  EXPECT_EQ(seifert_to_plumbing(Y(-3, half, frac(1, 3), half)).a2ext, CFString::strict({3, 3}));
  EXPECT_EQ(plumbing_to_seifert(p.a1, p.a2ext), Y(-2, half, half, half));
  EXPECT_THROW(plumbing_to_seifert(CFString::strict({2}), CFString::strict({2})), DomainError);
  EXPECT_THROW(seifert_to_plumbing(Y(-1, half, half, half)), DomainError);
}

TEST(Plumbing, RoundTrip) {
  for (auto a1 : strict_strings(3, 4))
    for (auto a2 : strict_strings(4, 4)) {
      if (a2.size() < 2) continue;
      auto y = plumbing_to_seifert(a1, a2);
      auto back = seifert_to_plumbing(y);
      // a1 and its dual give the same manifold; the smaller-first order picks one of them.
      EXPECT_TRUE(back.a1 == a1 || back.a1 == riemenschneider_dual(a1)) << a1.str();
      ASSERT_EQ(back.a2ext, a2);
      ASSERT_EQ(plumbing_to_seifert(back.a1, back.a2ext), y);
    }
}

TEST(Orientation, Reverse) {
  EXPECT_EQ(reverse_orientation(Y(-2, half, half, half)), Y(-1, half, half, half));
  auto minus_t3 = Y(-1, frac(2, 3), half, frac(1, 3));
  EXPECT_EQ(reverse_orientation(minus_t3), Y(-2, frac(1, 3), half, frac(2, 3)));
  for (std::int64_t e0 = -4; e0 <= 4; ++e0) {
    auto y = Y(e0, frac(2, 7), frac(3, 5), frac(5, 7));
    auto r = reverse_orientation(y);
    EXPECT_EQ(y.e0 + r.e0, -3);
    EXPECT_EQ(reverse_orientation(r), y);
  }
}

TEST(Legs, UniquelyComplementary) {
  // M_2: the middle leg [2] has dual [2], a prefix of the [2] legs.
  EXPECT_FALSE(leg_structure(Y(-1, half, half, half)).uniquely_complementary);
  EXPECT_TRUE(leg_structure(Y(-1, half, frac(1, 3), half)).uniquely_complementary);
  EXPECT_FALSE(leg_structure(Y(-1, half, frac(4, 7), half)).uniquely_complementary);
  EXPECT_TRUE(leg_structure(Y(-1, half, frac(4, 11), half)).uniquely_complementary);
  auto ls = leg_structure(Y(-1, half, frac(1, 3), frac(1, 5)));
  EXPECT_FALSE(ls.complementary_pair);
  EXPECT_FALSE(ls.uniquely_complementary);
}

TEST(Dihedral, Conversions) {
  auto d = dihedral_from_seifert(Y(0, half, half, half));
  EXPECT_EQ(d, (DihedralParams{5, 2, true}));
  EXPECT_EQ(seifert_from_dihedral(d), Y(0, half, half, half));
  EXPECT_EQ(y_mhn_dihedral(2, 1, 2), (DihedralParams{11, 7, true}));
  for (std::int64_t n = 1; n <= 6; ++n) EXPECT_EQ(y_mhn_dihedral(1, 0, n), (DihedralParams{n + 2, n + 1, true}));
  auto neg = dihedral_from_seifert(Y(-3, half, frac(2, 5), half));
  EXPECT_FALSE(neg.reversed);
  EXPECT_EQ(neg, (DihedralParams{13, 5, false}));
  EXPECT_EQ(seifert_from_dihedral(neg), Y(-3, half, frac(2, 5), half));
  EXPECT_THROW(dihedral_from_seifert(Y(0, frac(1, 3), half, frac(2, 3))), DomainError);
  EXPECT_THROW(seifert_from_dihedral({4, 2, true}), DomainError);
}

TEST(Dihedral, MhnFamily) {
  EXPECT_EQ(y_mhn(1, 0, 1), Y(-1, half, half, half));
  EXPECT_EQ(y_mhn(2, 1, 2), Y(-1, half, frac(4, 7), half));
  EXPECT_EQ(y_mhn(3, 2, 1), Y(1, half, frac(1, 4), half));
  EXPECT_THROW(y_mhn(4, 2, 1), DomainError);
  EXPECT_THROW(y_mhn(2, 1, 0), DomainError);
  for (std::int64_t m = 1; m <= 9; ++m)
    for (std::int64_t h = 0; h < m; ++h)
      for (std::int64_t n = 1; n <= 4; ++n) {
        if (!mhn_admissible(m, h, n)) continue;
        ASSERT_EQ(seifert_from_dihedral(y_mhn_dihedral(m, h, n)), y_mhn(m, h, n)) << m << h << n;
      }
}

TEST(Dihedral, UniqueE0) {
  EXPECT_EQ(unique_e0(2, 1), 0);
  EXPECT_EQ(unique_e0(3, 2), 1);
  EXPECT_EQ(unique_e0(5, 4), 3);
  EXPECT_THROW(unique_e0(3, 3), DomainError);
  for (std::int64_t m = 2; m <= 20; ++m)
    for (std::int64_t h = 1; h < m; ++h) {
      std::int64_t b = m * m - m * h + 1, hits = 0, found = -1;
      for (std::int64_t e = 0; e <= 100; ++e)
        if ((e + 1) * b < m * m && m * m < (e + 2) * b) ++hits, found = e;
      ASSERT_EQ(hits, 1);
      ASSERT_EQ(unique_e0(m, h), found);
    }
}

TEST(Dihedral, Recognizers) {
  EXPECT_EQ(recognize_minus_one_form(frac(4, 11)), (MHNForm{2, 1, 3}));
  EXPECT_EQ(recognize_minus_one_form(frac(1, 4)), (MHNForm{1, 0, 3}));
  EXPECT_FALSE(recognize_minus_one_form(frac(2, 7)));
  EXPECT_FALSE(recognize_minus_one_form(frac(4, 3)));  // would need n = 1
  EXPECT_EQ(recognize_nonneg_form(0, frac(1, 3)), (MHNForm{2, 1, 1}));
  EXPECT_EQ(recognize_nonneg_form(1, frac(1, 4)), (MHNForm{3, 2, 1}));
  EXPECT_FALSE(recognize_nonneg_form(1, frac(1, 3)));
  EXPECT_FALSE(recognize_nonneg_form(-1, frac(1, 3)));
  for (std::int64_t m = 2; m <= 12; ++m)
    for (std::int64_t h = 1; h < m; ++h) {
      if (std::gcd(m, h) != 1) continue;
      for (std::int64_t n = 2; n <= 4; ++n) ASSERT_EQ(recognize_minus_one_form(y_mhn(m, h, n).r[1]), (MHNForm{m, h, n}));
      auto y = y_mhn(m, h, 1);
      ASSERT_EQ(recognize_nonneg_form(y.e0, y.r[1]), (MHNForm{m, h, 1}));
    }
}

TEST(Section6, Identities) {
  auto r = section6_identities(2, 1, 0);
  EXPECT_EQ(r.p, 3);
  EXPECT_EQ(r.q, 1);
  EXPECT_EQ(r.p_prime, 1);
  EXPECT_EQ(r.q_prime, 0);
  EXPECT_TRUE(r.eq5_ok);
  EXPECT_TRUE(r.inverse_ok);
  auto s = section6_identities(3, 1, 0);
  EXPECT_EQ(s.p, 7);
  EXPECT_EQ(s.q, 2);
  EXPECT_EQ(s.p_prime, 4);
  EXPECT_TRUE(s.eq5_ok && s.inverse_ok);
  EXPECT_THROW(section6_identities(2, 1, 5), DomainError);
  EXPECT_THROW(section6_identities(4, 2, 0), DomainError);
}
