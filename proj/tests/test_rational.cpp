#include <gtest/gtest.h>

#include "sfs/rational.hpp"

using sfs::BigInt;
using sfs::Rational;

TEST(Rational, ReducesAndKeepsDenominatorPositive) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).str(), "0");
  EXPECT_EQ(Rational(BigInt(0), BigInt(5)).den(), 1);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("7/5").str(), "7/5");
  EXPECT_EQ(Rational::parse("-14/10").str(), "-7/5");
  EXPECT_EQ(Rational::parse("3").str(), "3");
  EXPECT_EQ(Rational::parse("4/2").str(), "2");
  EXPECT_THROW(Rational::parse("1/0"), sfs::DivisionByZero);
  EXPECT_THROW(Rational::parse("abc"), sfs::DomainError);
  EXPECT_THROW(Rational::parse("1/"), sfs::DomainError);
}

TEST(Rational, FloorAndCeilOnNegatives) {
  EXPECT_EQ(Rational::parse("-7/3").floor(), -3);
  EXPECT_EQ(Rational::parse("-7/3").ceil(), -2);
  EXPECT_EQ(Rational::parse("7/3").floor(), 2);
  EXPECT_EQ(Rational::parse("7/3").ceil(), 3);
  EXPECT_EQ(Rational(-4).floor(), -4);
  EXPECT_EQ(Rational(-4).ceil(), -4);
}

TEST(Rational, ExactArithmetic) {
  Rational a = Rational::parse("1/3"), b = Rational::parse("1/6");
  EXPECT_EQ((a + b).str(), "1/2");
  EXPECT_EQ((a - b).str(), "1/6");
  EXPECT_EQ((a * b).str(), "1/18");
  EXPECT_EQ((a / b).str(), "2");
  EXPECT_EQ((-a).str(), "-1/3");
  EXPECT_THROW(a / Rational(0), sfs::DivisionByZero);
  EXPECT_THROW(Rational(0).reciprocal(), sfs::DivisionByZero);
  EXPECT_EQ(Rational::parse("-2/5").reciprocal().str(), "-5/2");
}

TEST(Rational, OrderingAndSign) {
  EXPECT_LT(Rational::parse("-1/2"), Rational::parse("-1/3"));
  EXPECT_GT(Rational::parse("5/7"), Rational::parse("2/3"));
  EXPECT_EQ(Rational::parse("-1/2").sign(), -1);
  EXPECT_EQ(Rational(0).sign(), 0);
  EXPECT_TRUE(Rational(BigInt(9), BigInt(3)).is_integer());
}

TEST(Rational, LargeValuesStayExact) {
  Rational big(BigInt("123456789012345678901234567890"), BigInt("987654321098765432109876543210"));
  Rational back = big.reciprocal().reciprocal();
  EXPECT_EQ(back, big);
  EXPECT_EQ(big, Rational(sfs::BigInt(13717421), sfs::BigInt(109739369)));
  sfs::BigInt huge("123456789012345678901234567891");
  EXPECT_EQ(Rational(huge, sfs::BigInt(7)).num(), huge);
  EXPECT_THROW(sfs::to_int64(huge), sfs::DomainError);
}
