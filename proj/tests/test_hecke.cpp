#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "macfact/hecke.hpp"
#include "support.hpp"

using namespace macfact;

namespace {

MPoly swapped(const MPoly& f, int i) {
  std::vector<int> perm(f.nvars());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[i - 1], perm[i]);
  return f.permuted(perm);
}

// Reduced word of a permutation by bubble sort.
std::vector<int> reduced_word(std::vector<int> p) {
  std::vector<int> w;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        w.push_back(static_cast<int>(i) + 1);
        moved = true;
      }
  }
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

class HeckeRandom : public ::testing::TestWithParam<int> {};

// (x_i - x_{i+1}) (f.T_i - f^{s_i}) = (t - 1) (x_i f - x_{i+1} f^{s_i})
TEST_P(HeckeRandom, MatchesDividedDifference) {
  int n = GetParam();
  std::mt19937_64 rng(100 + n);
  Field g;
  Coef t = g.t();
  for (int k = 0; k < 30; ++k) {
    MPoly f = support::random_poly(rng, n);
    for (int i = 1; i < n; ++i) {
      MPoly xi = MPoly::variable(f.vars(), i - 1), xj = MPoly::variable(f.vars(), i);
      MPoly fs = swapped(f, i);
      MPoly lhs = (xi - xj) * (apply_hecke(f, i, false, g) - fs);
      MPoly rhs = (xi * f - xj * fs).scaled(t - Coef(1));
      ASSERT_EQ(lhs, rhs);
    }
  }
}

TEST_P(HeckeRandom, QuadraticAndInverse) {
  int n = GetParam();
  std::mt19937_64 rng(200 + n);
  Field g;
  Coef t = g.t();
  for (int k = 0; k < 100; ++k) {
    MPoly f = support::random_poly(rng, n);
    int i = 1 + static_cast<int>(rng() % (n - 1));
    MPoly a = apply_hecke(f, i, false, g);
    MPoly b = apply_hecke(a, i, false, g);
    ASSERT_TRUE((b - a.scaled(t - Coef(1)) - f.scaled(t)).is_zero());
    ASSERT_EQ(apply_hecke(a, i, true, g), f);
  }
}

TEST_P(HeckeRandom, Braid) {
  int n = GetParam();
  if (n < 3) GTEST_SKIP();
  std::mt19937_64 rng(300 + n);
  Field g;
  for (int k = 0; k < 100; ++k) {
    MPoly f = support::random_poly(rng, n);
    int i = 1 + static_cast<int>(rng() % (n - 2));
    ASSERT_EQ(apply_word(f, {i, i + 1, i}, g), apply_word(f, {i + 1, i, i + 1}, g));
  }
}

TEST_P(HeckeRandom, FarCommutation) {
  int n = GetParam();
  if (n < 4) GTEST_SKIP();
  std::mt19937_64 rng(400 + n);
  Field g;
  for (int k = 0; k < 100; ++k) {
    MPoly f = support::random_poly(rng, n);
    ASSERT_EQ(apply_word(f, {1, 3}, g), apply_word(f, {3, 1}, g));
  }
}

TEST_P(HeckeRandom, CherednikOperatorsCommute) {
  int n = GetParam();
  std::mt19937_64 rng(500 + n);
  Field g;
  for (int k = 0; k < 5; ++k) {
    MPoly f = support::random_poly(rng, n, 3, 2);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        ASSERT_EQ(apply_cherednik(apply_cherednik(f, i, g), j, g), apply_cherednik(apply_cherednik(f, j, g), i, g));
        ASSERT_EQ(apply_knop(apply_knop(f, i, g), j, g), apply_knop(apply_knop(f, j, g), i, g));
      }
  }
}

// Sum of T_w over all permutations, one reduced word each.
TEST_P(HeckeRandom, SymmetrizerMatchesBruteForce) {
  int n = GetParam();
  std::mt19937_64 rng(600 + n);
  Field g;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> words;
  do words.push_back(reduced_word(p));
  while (std::next_permutation(p.begin(), p.end()));
  for (int k = 0; k < 5; ++k) {
    MPoly f = support::random_poly(rng, n, 3, 2);
    MPoly acc(f.vars());
    for (const auto& w : words) acc += apply_word(f, w, g);
    MPoly s = symmetrize(f, g);
    ASSERT_EQ(s, acc);
    ASSERT_TRUE(s.is_symmetric());
  }
}

INSTANTIATE_TEST_SUITE_P(Arity, HeckeRandom, ::testing::Values(2, 3, 4));

TEST(Hecke, AffineShift) {
  Field g;
  VarSet v = VarSet::xs(3);
  MPoly f = MPoly::variable(v, 0) * MPoly::variable(v, 2).pow(2);
  // f(x3/q, x1, x2)
  MPoly expect = MPoly::monomial(v, make_exp({0, 2, 1}), Coef::monomial(0, -1, 0));
  EXPECT_EQ(apply_affine(f, g), expect);
}

TEST(Hecke, WorksOverSpecializedFields) {
  Field f = Field::special(SpecQT::parse("t=u; q=zeta(3,1)*u^-2"));
  std::mt19937_64 rng(1);
  MPoly p = support::random_poly(rng, 3);
  EvalAlphabet id{p.vars(), {Letter{Coef(1), 0}, Letter{Coef(1), 1}, Letter{Coef(1), 2}}};
  MPoly ps = MPoly::from_terms(p.vars(), {});
  for (const auto& [e, c] : p.terms()) ps += MPoly::monomial(p.vars(), e, f.map(c));
  MPoly a = apply_hecke(ps, 1, false, f);
  MPoly b = apply_hecke(a, 1, false, f);
  EXPECT_TRUE((b - a.scaled(f.t() - Coef(1)) - ps.scaled(f.t())).is_zero());
}
