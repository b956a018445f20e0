#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sfs/plumbing.hpp"

using namespace sfs;

namespace {

TridiagSpec chain(std::vector<std::int64_t> v) { return TridiagSpec(CFString::from(std::move(v))); }

std::vector<BigInt> big(std::vector<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Tridiag, Validation) {
  EXPECT_THROW(TridiagSpec{CFString()}, DomainError);
  EXPECT_THROW(chain({2, 1}), DomainError);
  EXPECT_THROW(chain({0, 2}), DomainError);
  EXPECT_NO_THROW(chain({1, 2, 3}));
}

TEST(Tridiag, UVVectors) {
  auto a = uv_vectors(chain({3, 2}));
  EXPECT_EQ(a.u, big({1, 3}));
  EXPECT_EQ(a.v, big({2, 1}));
  auto b = uv_vectors(chain({2, 2, 2}));
  EXPECT_EQ(b.u, big({1, 2, 3}));
  EXPECT_EQ(b.v, big({3, 2, 1}));
}

TEST(Tridiag, SignedDeterminant) {
  EXPECT_EQ(signed_det(chain({2})), -2);
  EXPECT_EQ(signed_det(chain({5, 2})), 9);
  EXPECT_EQ(signed_det(chain({2, 2, 3})), -7);
  for (auto s : strict_strings(5, 4)) {
    TridiagSpec t(s);
    ASSERT_EQ(Rational(signed_det(t)), oracle::det_laplace(t.matrix())) << s.str();
  }
}

TEST(Tridiag, EdgeColumns) {
  auto c = inverse_edge_columns(chain({3, 2}));
  EXPECT_EQ(c.first, (Vector{oracle::frac(-2, 5), oracle::frac(-1, 5)}));
  auto d = inverse_edge_columns(chain({2, 2}));
  EXPECT_EQ(d.last, (Vector{oracle::frac(-1, 3), oracle::frac(-2, 3)}));
  for (auto s : strict_strings(4, 5)) {
    TridiagSpec t(s);
    ExactMatrix inv = oracle::adjugate_inverse(t.matrix());
    auto e = inverse_edge_columns(t);
    ASSERT_EQ(e.first, inv.col(0)) << s.str();
    ASSERT_EQ(e.last, inv.col(s.size() - 1)) << s.str();
  }
}

TEST(Tridiag, InverseFromMinors) {
  for (auto s : strict_strings(4, 5)) {
    TridiagSpec t(s);
    ASSERT_EQ(tridiag_inverse(t), oracle::adjugate_inverse(t.matrix())) << s.str();
  }
  TridiagSpec lead(CFString::from({1, 3, 2}));
  EXPECT_EQ(tridiag_inverse(lead), oracle::adjugate_inverse(lead.matrix()));
  EXPECT_THROW(tridiag_inverse(chain({1, 1})), DomainError);
}

TEST(Tridiag, LeadingOneChains) {
  // [1, 2] has determinant (-1)(-2) - 1 = 1; [1, 1] is rejected; [1] alone is -1.
  EXPECT_EQ(signed_det(chain({1, 2})), 1);
  EXPECT_EQ(signed_det(chain({1})), -1);
}

TEST(Tridiag, DotIdentity) {
  auto one = dot_identity_check(chain({3}));
  EXPECT_TRUE(one.holds());
  EXPECT_EQ(one.rhs, oracle::frac(-1, 3));
  auto four3 = dot_identity_check(chain({4, 3}));
  EXPECT_TRUE(four3.holds());
  EXPECT_EQ(four3.rhs, oracle::frac(-7, 11));
  for (std::size_t n = 1; n <= 6; ++n) {
    auto r = dot_identity_check(TridiagSpec(CFString::strict(std::vector<std::int64_t>(n, 2))));
    EXPECT_TRUE(r.holds()) << n;
    EXPECT_EQ(r.lhs, Rational(0));
  }
  EXPECT_THROW(dot_identity_check(TridiagSpec(CFString::from({1, 2}))), DomainError);
}

TEST(PlumbingMatrix, SmallestStar) {
  auto q = assemble_q(CFString::strict({2}), CFString::strict({2}));
  EXPECT_EQ(q.matrix, oracle::from_ints({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}));
  auto q3 = assemble_q(CFString::strict({2}), CFString::strict({3}));
  EXPECT_EQ(q3.matrix, oracle::from_ints({{-2, 1, 0}, {1, -3, 1}, {0, 1, -2}}));
}

TEST(PlumbingMatrix, LegsAreDualAndReversed) {
  auto q = assemble_q(CFString::strict({3}), CFString::strict({2, 2}));
  EXPECT_EQ(q.size(), 5u);
  EXPECT_EQ(q.a3, CFString::strict({2, 2}));
  EXPECT_EQ(q.matrix, oracle::from_ints({{-3, 1, 0, 0, 0},
                                         {1, -2, 1, 1, 0},
                                         {0, 1, -2, 0, 0},
                                         {0, 1, 0, -2, 1},
                                         {0, 0, 0, 1, -2}}));
  auto r = assemble_q(CFString::strict({2, 3}), CFString::strict({2}));
  // a1 is reversed into the first block so its last entry sits next to the center.
  EXPECT_EQ(r.matrix(0, 0), Rational(-3));
  EXPECT_EQ(r.matrix(1, 1), Rational(-2));
  EXPECT_TRUE(r.matrix.symmetric());
}

TEST(PlumbingMatrix, RejectsBadInput) {
  EXPECT_THROW(assemble_q(CFString(), CFString::strict({2})), DomainError);
  EXPECT_THROW(assemble_q(CFString::strict({2}), CFString::relaxed({1, 2})), DomainError);
}

TEST(PlumbingMatrix, BlockInverseMatchesAdjugate) {
  auto inv = q_inverse_blocks(assemble_q(CFString::strict({2}), CFString::strict({2})));
  EXPECT_EQ(inv(1, 1), Rational(-1));
  auto inv3 = q_inverse_blocks(assemble_q(CFString::strict({2}), CFString::strict({3})));
  EXPECT_EQ(inv3(1, 1), oracle::frac(-1, 2));
  for (auto a1 : strict_strings(2, 4))
    for (auto a2 : strict_strings(3, 4)) {
      auto q = assemble_q(a1, a2);
      ASSERT_EQ(q_inverse_blocks(q), oracle::adjugate_inverse(q.matrix)) << a1.str() << " " << a2.str();
    }
}

TEST(PlumbingMatrix, RowRelation) {
  for (auto a1 : strict_strings(3, 4))
    for (auto a2 : strict_strings(3, 4)) {
      auto rep = appendix_row_relation(assemble_q(a1, a2));
      ASSERT_TRUE(rep.rows_relation) << a1.str() << " " << a2.str();
      ASSERT_TRUE(rep.product_shape) << a1.str() << " " << a2.str();
    }
}
