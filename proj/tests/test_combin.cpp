#include <gtest/gtest.h>

#include <map>
#include <set>

#include "macfact/combin.hpp"
#include "macfact/expr.hpp"

using namespace macfact;

TEST(Composition, ParseAndPrint) {
  EXPECT_EQ(parse_composition("[4,2^2,0^2]"), (Composition{4, 2, 2, 0, 0}));
  EXPECT_EQ(parse_composition(" [2, 0, 1] "), (Composition{2, 0, 1}));
  EXPECT_EQ(composition_str({3, 0, 1}), "[3,0,1]");
  EXPECT_TRUE(parse_composition("[]").empty());
  for (const char* bad : {"2,0", "[2,-1]", "[a]", "[2^x]", "[1,,2]"}) EXPECT_THROW(parse_composition(bad), std::invalid_argument) << bad;
}

TEST(Composition, Standardization) {
  EXPECT_EQ(standardization({0, 2, 1}), (std::vector<int>{0, 2, 1}));
  EXPECT_EQ(standardization({1, 1, 0}), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(standardization({2, 0, 2, 0}), (std::vector<int>{3, 1, 2, 0}));
  // a permutation of 0..N-1 for every composition
  for (const auto& v : compositions_up_to(4, 4)) {
    auto st = standardization(v);
    std::set<int> s(st.begin(), st.end());
    EXPECT_EQ(s.size(), v.size());
    EXPECT_EQ(*s.rbegin(), 3);
  }
}

TEST(Composition, ReciprocalVector) {
  auto r = reciprocal({4, 2, 0});
  EXPECT_EQ(r[0], (QMono{4, 2}));
  EXPECT_EQ(r[1], (QMono{2, 1}));
  EXPECT_EQ(r[2], (QMono{0, 0}));
}

// Reciprocal sums of every partition inside [4,2,0], generic and at t=u, q=u^-2.
TEST(Composition, ReciprocalSumTableInside420) {
  const std::map<std::string, std::pair<std::string, std::string>> table{
      {"[4,2,0]", {"q^4*t^2+q^2*t+1", "u^-6+u^-3+1"}}, {"[3,2,0]", {"q^3*t^2+q^2*t+1", "u^-4+u^-3+1"}},
      {"[2,2,0]", {"q^2*t^2+q^2*t+1", "u^-3+u^-2+1"}}, {"[1,1,0]", {"q*t^2+q*t+1", "u^-1+2"}},
      {"[4,1,0]", {"q^4*t^2+q*t+1", "u^-6+u^-1+1"}},   {"[3,1,0]", {"q^3*t^2+q*t+1", "u^-4+u^-1+1"}},
      {"[2,1,0]", {"q^2*t^2+q*t+1", "u^-2+u^-1+1"}},   {"[1,0,0]", {"q*t^2+t+1", "2+u"}},
      {"[4,0,0]", {"q^4*t^2+t+1", "u^-6+1+u"}},        {"[3,0,0]", {"q^3*t^2+t+1", "u^-4+1+u"}},
      {"[2,0,0]", {"q^2*t^2+t+1", "u^-2+1+u"}},        {"[0,0,0]", {"t^2+t+1", "1+u+u^2"}},
  };
  Field f = Field::special(SpecQT::parse("t=u; q=u^-2"));
  auto inside = partitions_inside({4, 2, 0});
  EXPECT_EQ(inside.size(), table.size());
  int hits = 0;
  for (const auto& mu : inside) {
    auto it = table.find(composition_str(mu));
    ASSERT_NE(it, table.end()) << composition_str(mu);
    Coef gen = reciprocal_sum(mu);
    EXPECT_EQ(gen, parse_coef(it->second.first, 0)) << composition_str(mu);
    EXPECT_EQ(f.map(gen), parse_coef(it->second.second, 1)) << composition_str(mu);
    if (f.map(gen) == parse_coef("u^-6+u^-3+1", 1)) ++hits;
  }
  EXPECT_EQ(hits, 1);
}

TEST(Composition, Dominance) {
  EXPECT_TRUE(dominance_leq({2, 1, 0}, {3, 0, 0}));
  EXPECT_FALSE(dominance_leq({3, 0, 0}, {2, 1, 0}));
  EXPECT_TRUE(dominance_less({1, 1}, {2, 1}));
  EXPECT_TRUE(dominance_less({0, 2}, {2, 0}));
  EXPECT_FALSE(dominance_less({2, 0}, {2, 0}));
}

TEST(Quasistaircase, Shapes) {
  EXPECT_EQ(staircase(2, 1, 2, 1), (Composition{4, 2, 2, 0, 0}));
  EXPECT_EQ(quasistaircase({2, 1, 2, 1, 1}), (Composition{5, 3, 3, 0, 0, 0, 0, 0}));
  EXPECT_EQ(quasistaircase({1, 1, 2, 1, 1}), (Composition{5, 3, 0, 0, 0}));
  EXPECT_THROW(quasistaircase({1, 1, 4, 1, 1}), std::invalid_argument);
  EXPECT_THROW(quasistaircase({1, 2, 2, 0, 1}), std::invalid_argument);
}

TEST(Quasistaircase, AdmissibleStaircases) {
  for (int l = 1; l <= 3; ++l)
    for (int s = 2; s <= 3; ++s)
      for (int beta = 0; beta <= 2; ++beta) EXPECT_TRUE(is_admissible(staircase(l, 1, s, beta), l, s));
  EXPECT_FALSE(is_admissible({1, 0, 0}, 2, 2));
}

TEST(YBPath, ReplaysToTarget) {
  for (const auto& v : compositions_up_to(4, 5)) {
    for (auto rule : {PathRule::AffineFirst, PathRule::DescentFirst}) {
      auto p = yb_path(v, rule);
      EXPECT_EQ(replay_path(4, p), v) << composition_str(v);
      EXPECT_EQ(static_cast<int>(std::count_if(p.begin(), p.end(), [](const YBStep& s) { return s.kind == YBStep::AffinePhi; })),
                weight(v));
    }
  }
}

TEST(YBPath, AvoidingBlockedEdges) {
  Composition v{2, 0, 1};
  auto all = yb_path_avoiding(v, [](const Composition&, int) { return false; });
  ASSERT_TRUE(all.has_value());
  EXPECT_EQ(replay_path(3, *all), v);
  auto none = yb_path_avoiding(v, [](const Composition&, int) { return true; });
  EXPECT_FALSE(none.has_value());
}

TEST(Enumerations, Counts) {
  EXPECT_EQ(partitions_up_to(3, 3).size(), 7u);  // 0, 1, 2, 11, 3, 21, 111
  EXPECT_EQ(compositions_up_to(2, 2).size(), 6u);
  EXPECT_EQ(partitions_inside({2, 1}).size(), 5u);
}
