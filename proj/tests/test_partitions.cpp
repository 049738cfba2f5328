#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vwu/partitions.hpp"

using namespace vwu;

TEST(Partition, ParseAndPrint) {
  Partition p = Partition::parse("3,1,1");
  EXPECT_EQ(p.size(), 5);
  EXPECT_EQ(p.str(), "[3,1,1]");
  EXPECT_EQ(p.exponent_str(), "[3,1^(2)]");
  EXPECT_EQ(Partition::parse("[3,2^(2),1]"), (Partition{3, 2, 2, 1}));
  EXPECT_EQ(Partition::parse("[2,2]"), (Partition{2, 2}));
  EXPECT_THROW(Partition::parse("1,3"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2,x"), std::invalid_argument);
}

TEST(Partition, Dominance) {
  EXPECT_TRUE(dominance_leq({2, 2}, {4}));
  EXPECT_FALSE(dominance_leq({3, 1}, {2, 2}));
  for (auto& p : partitions_of(6)) EXPECT_TRUE(dominance_leq(p, p));
  EXPECT_THROW(dominance_leq({2}, {3}), std::invalid_argument);
}

TEST(Partition, Transpose) {
  EXPECT_EQ(transpose({3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(transpose({5}), (Partition{1, 1, 1, 1, 1}));
  EXPECT_EQ(transpose({2, 2}), (Partition{2, 2}));
  for (auto& p : partitions_of(7)) EXPECT_EQ(transpose(transpose(p)), p);
}

TEST(Partition, TransposeReversesDominance) {
  auto ps = partitions_of(7);
  for (auto& p : ps)
    for (auto& q : ps) EXPECT_EQ(dominance_leq(p, q), dominance_leq(transpose(q), transpose(p)));
}

TEST(Partition, Concat) {
  EXPECT_EQ(concat({3, 2}, {2, 1}), (Partition{3, 2, 2, 1}));
  EXPECT_EQ(concat({3, 2}, Partition{}), (Partition{3, 2}));
  EXPECT_THROW(concat({2}, {3}), std::invalid_argument);
}

TEST(Partition, Counts) {
  std::vector<std::size_t> want = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), want[n]) << n;
}

TEST(Partition, Types) {
  EXPECT_TRUE(is_type({3, 3, 2}, 'C'));
  EXPECT_FALSE(is_type({3, 2, 2, 1}, 'C'));
  EXPECT_TRUE(is_type({2, 2, 1}, 'B'));
  EXPECT_FALSE(is_type({2, 1}, 'B'));
  EXPECT_TRUE(is_type({3, 1}, 'D'));
}

TEST(Partition, Collapse) {
  EXPECT_EQ(collapse({3, 2, 2, 1}, 'C'), (Partition{2, 2, 2, 2}));
  EXPECT_EQ(collapse({4, 2}, 'C'), (Partition{4, 2}));
  EXPECT_EQ(collapse({3, 3, 2}, 'C'), (Partition{3, 3, 2}));
}

TEST(Partition, CollapseMatchesBruteForce) {
  for (char t : {'B', 'C', 'D'})
    for (int n = 1; n <= 10; ++n) {
      if ((t == 'B') != (n % 2 == 1)) continue;
      for (auto& p : partitions_of(n)) {
        Partition c = collapse(p, t);
        EXPECT_TRUE(is_type(c, t));
        EXPECT_EQ(c, oracle::collapse_bruteforce(p, t)) << t << " " << p.str();
        EXPECT_EQ(collapse(c, t), c);
      }
    }
}

TEST(StarPartition, Parse) {
  auto s = parse_star({2, 2, 2});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->mu0(), 1);
  EXPECT_TRUE(in_p_double_star({2, 2, 2}));
  EXPECT_TRUE(in_p_star({3, 3}));
  EXPECT_FALSE(in_p_star({3, 1}));
  EXPECT_TRUE(in_p_double_star({2}));
  EXPECT_FALSE(in_p_double_star({1, 1}));
}

TEST(StarPartition, Enumeration) {
  for (int n = 1; n <= 5; ++n) {
    auto all = star_partitions(n, false);
    auto dbl = star_partitions(n, true);
    EXPECT_LE(dbl.size(), all.size());
    for (auto& s : all) {
      EXPECT_EQ(s.underlying.size(), 2 * n);
      EXPECT_TRUE(in_p_star(s.underlying));
    }
    for (auto& s : dbl) EXPECT_TRUE(s.double_star());
  }
  EXPECT_EQ(star_partitions(1, true).size(), 1u);
}

TEST(Tilde, Examples) {
  EXPECT_EQ(tilde({3, 3}), (Partition{3, 3}));
  EXPECT_EQ(tilde({2, 2}), (Partition{3, 1}));
  EXPECT_THROW(tilde({3, 1}), std::invalid_argument);
}

TEST(Tilde, LeftInverseOnDoubleStar) {
  for (int n = 1; n <= 6; ++n)
    for (auto& s : star_partitions(n, true)) {
      Partition c = collapse(transpose(s.underlying), 'C');
      ASSERT_TRUE(in_p_prime(c)) << c.str();
      EXPECT_EQ(tilde(c), transpose(s.underlying)) << s.underlying.str();
    }
}
