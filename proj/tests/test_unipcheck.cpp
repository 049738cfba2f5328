#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vwu/unipcheck.hpp"

using namespace vwu;

namespace {
Rational q(int a, int b = 1) { return Rational(a, b); }
RootSystem rs_of(const char* s) { return build_root_system(CartanType::parse(s)); }
Verdict direct(const RootSystem& rs, const Weight& l, const TableSet* t = nullptr) {
  CheckOptions o;
  o.mode = Mode::Direct;
  o.tables = t;
  return check_vwu(rs, l, o);
}
TableSet tables() {
  TableSet ts;
  ts.load_dir(VWU_TABLE_DIR);
  return ts;
}
}  // namespace

TEST(Check, A1Examples) {
  auto a1 = rs_of("A1");
  EXPECT_TRUE(direct(a1, a1.from_fundamental({1})).is_vwu);
  auto v2 = direct(a1, a1.from_fundamental({2}));
  EXPECT_TRUE(v2.is_vwu);
  auto v4 = direct(a1, a1.from_fundamental({4}));
  EXPECT_FALSE(v4.is_vwu);
  ASSERT_FALSE(v4.witnesses.empty());
  EXPECT_EQ(a1.pairings(v4.witnesses[0].gamma), (RVec{2}));
  EXPECT_EQ(v4.witnesses[0].orbit_lambda.partition, (Partition{2}));
  EXPECT_EQ(v4.witnesses[0].orbit_gamma.partition, (Partition{2}));
  EXPECT_TRUE(v4.witnesses[0].equal);
}

TEST(Check, A2Examples) {
  auto a2 = rs_of("A2");
  EXPECT_TRUE(direct(a2, a2.from_fundamental({1, 1})).is_vwu);
  EXPECT_FALSE(direct(a2, a2.from_fundamental({2, 2})).is_vwu);
  EXPECT_TRUE(direct(a2, a2.zero()).is_vwu);
}

TEST(Check, Triangular) {
  auto a4 = rs_of("A4");
  Weight l = to_weight(a4, v_eps({3, 2}, 0), Coords::Bourbaki);
  EXPECT_TRUE(triangular_test(a4, l));
  EXPECT_TRUE(direct(a4, l).is_vwu);

  auto b3 = rs_of("B3");
  RVec v = v_Z(star_partitions(2, true).back());
  RVec h = v_half({1});
  v.insert(v.end(), h.begin(), h.end());
  Weight lb = to_weight(b3, v, Coords::Bourbaki);
  EXPECT_TRUE(triangular_test(b3, lb));
  EXPECT_TRUE(direct(b3, lb).is_vwu);

  auto a2 = rs_of("A2");
  Weight bad = to_weight(a2, {2, 0, -2}, Coords::Bourbaki);
  EXPECT_FALSE(triangular_test(a2, bad));
  EXPECT_FALSE(direct(a2, bad).is_vwu);
  CheckOptions o;
  o.mode = Mode::Triangular;
  EXPECT_FALSE(check_vwu(a2, bad, o).triangular.value_or(true));
}

TEST(Check, TypeAShiftInvariance) {
  auto a2 = rs_of("A2");
  Weight a = to_weight(a2, {0, 0, -1}, Coords::Bourbaki);
  Weight b = to_weight(a2, {5, 5, 4}, Coords::Bourbaki);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(triangular_test(a2, a));
}

TEST(Check, BothModeOnRandomTriangular) {
  std::mt19937_64 rng(20240601);
  std::vector<Rational> eps = {q(0), q(1, 4), q(-1, 4), q(1, 3)};
  int done = 0;
  for (int it = 0; it < 200; ++it) {
    char fam = "ABCD"[rng() % 4];
    int n = 2 + (int)(rng() % 3);
    if (fam == 'D' && n < 3) n = 3;
    auto rs = build_root_system(CartanType{fam, n});
    RVec v;
    if (fam == 'A') {
      int left = n + 1;
      std::size_t e = 0;
      while (left > 0 && e < eps.size()) {
        int k = e + 1 == eps.size() ? left : 1 + (int)(rng() % left);
        auto ps = partitions_of(k);
        RVec b = v_eps(ps[rng() % ps.size()], eps[e++]);
        v.insert(v.end(), b.begin(), b.end());
        left -= k;
      }
    } else {
      int r = (int)(rng() % (n + 1)), s = (int)(rng() % (n - r + 1)), t = n - r - s;
      if (r) {
        auto sp = star_partitions(r, true);
        RVec b = v_Z(sp[rng() % sp.size()]);
        v.insert(v.end(), b.begin(), b.end());
      }
      if (s) {
        auto ps = partitions_of(s);
        RVec b = v_half(ps[rng() % ps.size()]);
        v.insert(v.end(), b.begin(), b.end());
      }
      if (t) {
        auto ps = partitions_of(t);
        RVec b = v_quarter(ps[rng() % ps.size()]);
        v.insert(v.end(), b.begin(), b.end());
      }
    }
    CheckOptions o;
    o.mode = Mode::Both;
    Verdict d = check_vwu(rs, to_weight(rs, v, Coords::Bourbaki), o);
    EXPECT_EQ(d.method, "both");
    EXPECT_TRUE(d.is_vwu) << rs.type().name() << " " << to_string(v);
    ++done;
  }
  EXPECT_EQ(done, 200);
}

TEST(Check, ExceptionalNeedsTable) {
  auto g2 = rs_of("G2");
  Weight l = g2.from_fundamental({1, 1});
  EXPECT_THROW(check_vwu(g2, l, {}), UnsupportedFactor);
  TableSet ts = tables();
  EXPECT_TRUE(direct(g2, l, &ts).is_vwu);
  EXPECT_FALSE(direct(g2, g2.from_fundamental({2, 2}), &ts).is_vwu);
}

TEST(Check, WeylInvariance) {
  for (auto name : {"B2", "C3", "A3"}) {
    auto rs = rs_of(name);
    RVec c(rs.rank(), q(1, 2));
    c[0] = 2;
    Weight l = rs.from_fundamental(c);
    bool base = direct(rs, l).is_vwu;
    for (int i = 0; i < rs.rank(); ++i) {
      Weight m = rs.reflect(i, l);
      EXPECT_EQ(direct(rs, m).is_vwu, base) << name;
      EXPECT_EQ(direct(rs, rs.reflect((i + 1) % rs.rank(), m)).is_vwu, base) << name;
    }
  }
}

TEST(Check, FactorSplit) {
  // B2 with pairings making the integral coroots a product A1 x A1
  auto b2 = rs_of("B2");
  Weight l = to_weight(b2, {q(3, 2), q(1, 2)}, Coords::Bourbaki);
  auto d = direct(b2, l);
  int ranks = 0;
  for (auto& f : d.factors) ranks += f.type.rank;
  EXPECT_LE(ranks, 2);
  auto m = oracle::model('B', 2);
  EXPECT_EQ(d.is_vwu, oracle::vwu_bruteforce(m, m.from_pairings(b2.pairings(l)), nullptr).is_vwu);
}

TEST(Check, WitnessesShrinkNorm) {
  auto c3 = rs_of("C3");
  for (auto c : {RVec{2, 2, 2}, RVec{3, 1, 1}, RVec{1, 2, 1}}) {
    Weight l = c3.from_fundamental(c);
    auto d = direct(c3, l);
    EXPECT_TRUE(d.norm_guard);
    for (auto& w : d.witnesses) {
      EXPECT_LT(w.norm_sq, norm_sq(c3, d.lambda));
      EXPECT_TRUE(closure_leq(w.orbit_lambda, w.orbit_gamma));
    }
  }
}

TEST(Check, FirstFailureStopsEarly) {
  auto a3 = rs_of("A3");
  Weight l = a3.from_fundamental({3, 3, 3});
  CheckOptions all;
  all.mode = Mode::Direct;
  CheckOptions one = all;
  one.first_failure = true;
  auto va = check_vwu(a3, l, all), vo = check_vwu(a3, l, one);
  EXPECT_FALSE(va.is_vwu);
  EXPECT_FALSE(vo.is_vwu);
  EXPECT_EQ(vo.witnesses.size(), 1u);
  EXPECT_GE(va.witnesses.size(), vo.witnesses.size());
}

TEST(Input, Coordinates) {
  auto a2 = rs_of("A2");
  EXPECT_EQ(to_weight(a2, {1, 1}, Coords::Pairing), a2.from_fundamental({1, 1}));
  EXPECT_EQ(to_weight(a2, {1, 0, -1}, Coords::Bourbaki), a2.from_fundamental({1, 1}));
  EXPECT_THROW(to_weight(a2, {1, 0}, Coords::Bourbaki), std::invalid_argument);
  EXPECT_EQ(parse_mode("both"), Mode::Both);
  EXPECT_THROW(parse_mode("nope"), std::invalid_argument);
}
