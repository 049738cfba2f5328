#include <gtest/gtest.h>

#include "vwu/triangular.hpp"

using namespace vwu;

namespace {
Rational q(int a, int b = 1) { return Rational(a, b); }
}  // namespace

TEST(VEps, Examples) {
  EXPECT_EQ(v_eps({3, 2}, 0), (RVec{0, 0, 0, -1, -1}));
  EXPECT_EQ(v_eps({1}, 0), (RVec{0}));
  EXPECT_EQ(v_eps({2, 1, 1}, q(1, 4)), (RVec{q(5, 4), q(1, 4), q(1, 4), q(-3, 4)}));
  EXPECT_THROW(v_eps({1}, q(1, 2)), std::invalid_argument);
}

TEST(VEps, Inverse) {
  EXPECT_EQ(p_eps({0, 0, 0, -1, -1}, 0), (Partition{3, 2}));
  EXPECT_EQ(p_eps({q(1, 4), q(1, 4), q(1, 4)}, q(1, 4)), (Partition{3}));
  EXPECT_EQ(p_eps({1, -1}, 0), (Partition{1, 1}));
  for (auto eps : {q(0), q(1, 4), q(-1, 4), q(2, 5), q(-2, 5)})
    for (int n = 1; n <= 7; ++n)
      for (auto& p : partitions_of(n)) {
        RVec v = v_eps(p, eps);
        EXPECT_EQ(p_eps(v, eps), p);
        EXPECT_TRUE(is_eps_triangular(v, eps));
      }
}

TEST(VEps, TriangularPredicate) {
  EXPECT_FALSE(is_eps_triangular({2, 0}, 0));
  EXPECT_TRUE(is_eps_triangular({}, 0));
  EXPECT_FALSE(is_eps_triangular({0, 1}, 0));
}

TEST(VZ, Examples) {
  auto s = parse_star({2, 2, 2});
  ASSERT_TRUE(s);
  EXPECT_EQ(v_Z(*s), (RVec{1, 1, 0}));
  EXPECT_EQ(p_Z({1, 1, 0}), (Partition{2, 2, 2}));
  EXPECT_TRUE(is_Z_triangular({1, 1, 0}));
  for (int n = 1; n <= 6; ++n)
    for (auto& sp : star_partitions(n, true)) {
      RVec v = v_Z(sp);
      EXPECT_EQ((int)v.size(), n);
      EXPECT_EQ(p_Z(v), sp.underlying);
      EXPECT_TRUE(is_Z_triangular(v));
    }
}

TEST(VHalfQuarter, Examples) {
  EXPECT_EQ(v_half({2, 1}), (RVec{q(3, 2), q(1, 2), q(1, 2)}));
  EXPECT_EQ(p_half({q(3, 2), q(1, 2), q(1, 2)}), (Partition{2, 1}));
  EXPECT_EQ(v_quarter({3}), (RVec{q(1, 4), q(1, 4), q(1, 4)}));
  for (int n = 1; n <= 7; ++n)
    for (auto& p : partitions_of(n)) {
      EXPECT_EQ(p_half(v_half(p)), p);
      EXPECT_EQ(p_quarter(v_quarter(p)), p);
      EXPECT_TRUE(is_half_triangular(v_half(p)));
      EXPECT_TRUE(is_quarter_triangular(v_quarter(p)));
    }
  EXPECT_FALSE(is_half_triangular({q(3, 2), q(3, 2)}));
}

TEST(Decompose, Examples) {
  auto b = decompose_concatenation({1, q(1, 2), 0}, 'B');
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].kind, LatticeKind::Z);
  EXPECT_EQ(b[0].values, (RVec{1, 0}));
  EXPECT_EQ(b[1].kind, LatticeKind::Half);
  EXPECT_EQ(b[1].values, (RVec{q(1, 2)}));

  auto z = decompose_concatenation({3, -1, 2}, 'C');
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0].values, (RVec{3, 2, 1}));

  auto a = decompose_concatenation({q(1, 4), q(1, 5)}, 'A');
  EXPECT_EQ(a.size(), 2u);

  auto r = decompose_concatenation({q(1, 3)}, 'D');
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].kind, LatticeKind::Residual);
  EXPECT_FALSE(is_triangular(r[0]));
}

TEST(Decompose, OutOfClassIsNotTriangular) {
  SortedSequence s{{q(1, 2), q(-1, 2)}, LatticeKind::Half, 0};
  EXPECT_FALSE(in_class(s));
  EXPECT_FALSE(is_triangular(s));
}

TEST(Residue, Range) {
  EXPECT_EQ(residue(q(3, 4)), q(-1, 4));
  EXPECT_EQ(residue(q(-1, 2)), q(1, 2));
  EXPECT_EQ(residue(q(5)), q(0));
}
