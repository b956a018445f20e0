#include <gtest/gtest.h>

#include <set>

#include "sfs/continued_fraction.hpp"
#include "sfs/lisca.hpp"

using namespace sfs;

namespace {

// All values reachable by the four families for a given m, generated by
// scanning h over a generous range with the side conditions spelled out.
std::set<std::int64_t> family_values(std::int64_t m) {
  std::set<std::int64_t> out;
  for (std::int64_t h = 1; h <= 4 * m + 4; ++h) {
    for (std::int64_t s : {1, -1}) {
      if (h < m && std::gcd(h, m) == 1) out.insert(m * h + s);
      if (h < m && std::gcd(h, m) == 2) out.insert(m * h + s);
      if (h > 1 && (2 * m - s) % h == 0) out.insert(h * (m + s));
      if (h > 1 && h % 2 == 1 && (m + s) % h == 0) out.insert(h * (m + s));
    }
  }
  return out;
}

bool brute_member(std::int64_t p, std::int64_t q) {
  std::int64_t m = 1;
  while (m * m < p) ++m;
  if (m * m != p) return false;
  std::int64_t qs = 1;
  while ((q * qs) % p != 1 % p) ++qs;
  auto vals = family_values(m);
  for (std::int64_t t : {q, p - q, qs, p - qs})
    if (vals.count(t)) return true;
  return false;
}

}  // namespace

TEST(LiscaMembership, KnownValues) {
  auto c = r_membership(4, 1);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->m, 2);
  EXPECT_EQ(c->witness_target, WitnessTarget::Q);
  EXPECT_EQ(c->family, LiscaFamily::F1_mh_pm1_coprime);
  EXPECT_EQ(c->h, 1);
  EXPECT_EQ(c->sign, PmSign::Minus);
  EXPECT_FALSE(r_membership(2, 1));
  EXPECT_FALSE(r_membership(25, 3));
  EXPECT_TRUE(r_membership(9, 2));
  EXPECT_TRUE(r_member(Rational(BigInt(9), BigInt(2))));
}

TEST(LiscaMembership, InputErrors) {
  EXPECT_THROW(r_membership(4, 2), DomainError);
  EXPECT_THROW(r_membership(4, 4), DomainError);
  EXPECT_THROW(r_membership(4, 0), DomainError);
  EXPECT_THROW(r_member(Rational(1)), DomainError);
}

TEST(LiscaMembership, AgreesWithBruteForceScan) {
  for (std::int64_t p = 2; p <= 900; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto c = r_membership(p, q);
      ASSERT_EQ(c.has_value(), brute_member(p, q)) << p << "/" << q;
      ASSERT_TRUE(!c || verify_certificate(p, q, *c));
    }
}

TEST(LiscaMembership, ClosedUnderInverseAndComplement) {
  // 81/31 is witnessed by p - q = 50 = 5 * 10; 81/34 has q^* = 31 and is
  // only reached through p - q^* = 50.
  EXPECT_TRUE(r_membership(81, 31));
  auto c = r_membership(81, 34);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->witness_target, WitnessTarget::PminusQStar);
  EXPECT_EQ(mod_inverse<std::int64_t>(31, 81), 34);
}

TEST(LiscaMembership, CertificateTieBreakIsFirstInDeclarationOrder) {
  // 9/4: q = 4 = 3*1+1 (F1, Plus), and 9 - 4 = 5 = 3*2-1 (F1, Minus).
  auto c = r_membership(9, 4);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->witness_target, WitnessTarget::Q);
  EXPECT_EQ(c->h, 1);
  EXPECT_EQ(c->sign, PmSign::Plus);
}

TEST(LiscaMembership, CertificatesRejectTampering) {
  auto c = r_membership(9, 2);
  ASSERT_TRUE(c);
  RCertificate bad = *c;
  bad.h += 1;
  EXPECT_FALSE(verify_certificate(9, 2, bad));
  bad = *c;
  bad.m = 4;
  EXPECT_FALSE(verify_certificate(9, 2, bad));
}

TEST(LiscaGrid, SmallBounds) {
  auto g4 = r_grid(4);
  EXPECT_NE(std::find(g4.begin(), g4.end(), std::make_pair<std::int64_t, std::int64_t>(4, 1)), g4.end());
  EXPECT_NE(std::find(g4.begin(), g4.end(), std::make_pair<std::int64_t, std::int64_t>(4, 3)), g4.end());
  EXPECT_TRUE(r_grid(3).empty());
  auto g9 = r_grid(9);
  EXPECT_NE(std::find(g9.begin(), g9.end(), std::make_pair<std::int64_t, std::int64_t>(9, 2)), g9.end());
  EXPECT_NE(std::find(g9.begin(), g9.end(), std::make_pair<std::int64_t, std::int64_t>(9, 4)), g9.end());
  EXPECT_TRUE(std::is_sorted(g9.begin(), g9.end()));
}

TEST(LiscaGrid, MembersHaveSmallIValue) {
  for (auto [p, q] : r_grid(400)) {
    std::int64_t i = i_value(cf_expand(Rational(BigInt(p), BigInt(q))));
    ASSERT_LE(i, 1) << p << "/" << q;
  }
}

TEST(LiscaFamilies, NamesAreStable) {
  EXPECT_EQ(to_string(LiscaFamily::F1_mh_pm1_coprime), "F1_mh±1_coprime");
  EXPECT_EQ(to_string(LiscaFamily::F4_h_times_m_pm1_odd_divides_m_pm1), "F4_h_times_m±1_odd_divides_m±1");
  EXPECT_EQ(to_string(WitnessTarget::PminusQ), "PminusQ");
}
