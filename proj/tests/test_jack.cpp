#include <gtest/gtest.h>

#include "macfact/expr.hpp"
#include "macfact/identities.hpp"
#include "macfact/jack.hpp"

using namespace macfact;

TEST(Jack, AlphaParsing) {
  EXPECT_EQ(AlphaParam::parse("-4/2"), AlphaParam(-2, 1));
  EXPECT_EQ(AlphaParam(3, -6).str(), "-1/2");
  EXPECT_THROW(AlphaParam::parse("1/0"), std::invalid_argument);
  EXPECT_EQ(AlphaParam::parse("0/5"), AlphaParam(0, 1));
  EXPECT_THROW(AlphaParam::parse("2x"), std::invalid_argument);
  EXPECT_EQ(clustering_alpha(1, 2), AlphaParam(-2, 1));
  EXPECT_EQ(clustering_alpha(2, 3), AlphaParam(-3, 2));
  EXPECT_THROW(clustering_alpha(3, 3), std::invalid_argument);
}

// P_2 = m_2 + 2/(1+alpha) m_11
TEST(Jack, TwoRowClosedForm) {
  VarSet v = VarSet::xs(2);
  for (auto [p, r] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {-2, 1}, {1, 2}, {3, 2}, {-3, 2}}) {
    Rational c = Rational(2) / (Rational(1) + Rational(p, r));
    MPoly expect = parse_poly("x1^2+x2^2", v, Field()) + MPoly::monomial(v, make_exp({1, 1}), Coef(c));
    EXPECT_EQ(jack({2, 0}, AlphaParam(p, r)), expect) << p << "/" << r;
  }
}

TEST(Jack, SchurAtAlphaOne) {
  VarSet v = VarSet::xs(3);
  EXPECT_EQ(jack({2, 1, 0}, AlphaParam(1, 1)),
            parse_poly("x1^2*x2+x1^2*x3+x2^2*x1+x2^2*x3+x3^2*x1+x3^2*x2+2*x1*x2*x3", v, Field()));
}

TEST(Jack, SpecializationCoherence) {
  for (const auto& lam : std::vector<Composition>{{3, 1, 0}, {2, 2, 1}, {4, 2, 0}}) {
    MPoly a = jack_from_spec(lam, SpecQT{1, 2, 1, 0});
    MPoly b = jack_from_spec(lam, SpecQT{2, 4, 1, 0});
    EXPECT_EQ(a, b) << composition_str(lam);
    EXPECT_EQ(a, jack(lam, AlphaParam(-2, 1))) << composition_str(lam);
  }
}

TEST(Jack, ClusteringExample) {
  VarSet v({"Z", "z4", "z5"});
  MPoly j = jack({5, 3, 0, 0, 0}, AlphaParam(-2, 1));
  MPoly lhs = substitute(j, parse_alphabet({"3*Z", "z4", "z5"}, v, Field()));
  MPoly rhs = parse_poly("(Z-z4)^3*(Z-z5)^3", v, Field()) *
              substitute(jack({2, 0}, AlphaParam(-2, 1)), parse_alphabet({"z4", "z5"}, v, Field()));
  auto rep = proportional(lhs, rhs, Mode::UpToScalar);
  EXPECT_TRUE(rep.pass);
  ASSERT_TRUE(rep.scalar.has_value());
  EXPECT_TRUE(rep.scalar->num().is_constant());
}

TEST(Jack, Errors) {
  EXPECT_THROW(jack({1, 2}, AlphaParam(1, 1)), std::invalid_argument);
  EXPECT_THROW(jack(Composition(9, 1), AlphaParam(1, 1)), std::invalid_argument);
}
