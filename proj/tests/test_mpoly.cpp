#include <gtest/gtest.h>

#include <random>

#include "macfact/expr.hpp"
#include "macfact/mpoly.hpp"
#include "support.hpp"

using namespace macfact;

TEST(MPoly, ArithmeticLaws) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    MPoly a = support::random_poly(rng, 3), b = support::random_poly(rng, 3), c = support::random_poly(rng, 3);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.pow(2), a * a);
  }
}

TEST(MPoly, HomogeneousDegreeAndSymmetry) {
  VarSet v = VarSet::xs(2);
  MPoly x = MPoly::variable(v, 0), y = MPoly::variable(v, 1);
  EXPECT_EQ((x * y + x * x).homogeneous_degree(), 2);
  EXPECT_FALSE((x * y + x).homogeneous_degree().has_value());
  EXPECT_TRUE((x * y + x + y).is_symmetric());
  EXPECT_FALSE((x + y * y).is_symmetric());
  EXPECT_EQ((x - y).permuted({1, 0}), y - x);
}

TEST(MPoly, Substitute) {
  VarSet v = VarSet::xs(3);
  MPoly f = MPoly::variable(v, 0) * MPoly::variable(v, 1) + MPoly::variable(v, 2);
  VarSet w({"y"});
  Coef t = Coef::monomial(0, 0, 1);
  EvalAlphabet a{w, {Letter{t, 0}, Letter{Coef(1), 0}, Letter{Coef(2), -1}}};
  MPoly g = substitute(f, a);
  EXPECT_EQ(g, MPoly::variable(w, 0).pow(2).scaled(t) + MPoly::constant(w, Coef(2)));
}

TEST(MPoly, EvaluateMatchesSubstitute) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    MPoly f = support::random_poly(rng, 3);
    std::vector<Coef> pt{Coef(2), Coef::monomial(0, 1, 0), Coef(-1)};
    EvalAlphabet a{VarSet({"z"}), {Letter{pt[0], -1}, Letter{pt[1], -1}, Letter{pt[2], -1}}};
    MPoly s = substitute(f, a);
    Coef c = s.is_zero() ? Coef() : s.coefficient(zero_exp());
    EXPECT_EQ(evaluate(f, pt), c);
  }
}

TEST(FracPoly, JsonRoundTrip) {
  VarSet v = VarSet::xs(2);
  Coef q = Coef::monomial(0, 1, 0);
  MPoly f = MPoly::variable(v, 0, q) - MPoly::variable(v, 1).pow(2);
  FracPoly fp = to_frac_poly(f, Coef(1) - q);
  EXPECT_EQ(frac_poly_from_json(fp.to_json()), fp);
  Field sp = Field::special(SpecQT::parse("t=u; q=zeta(3,1)*u^-2"));
  MPoly g = MPoly::variable(v, 0, sp.q()) + MPoly::constant(v, sp.t());
  FracPoly gp = to_frac_poly(g, Coef(1) + sp.t());
  EXPECT_EQ(frac_poly_from_json(gp.to_json()), gp);
  auto [num, den] = clear_denominators(fp);
  EXPECT_EQ(to_frac_poly(num, den), fp);
}

TEST(MPoly, TextAndLatex) {
  VarSet v = VarSet::xs(2);
  MPoly f = MPoly::variable(v, 0).pow(2) - MPoly::constant(v, Coef::monomial(0, 0, 1));
  EXPECT_EQ(parse_poly(f.str(), v, Field()), f);
  EXPECT_NE(f.latex().find("x_{1}^{2}"), std::string::npos);
}
