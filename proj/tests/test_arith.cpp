#include <gtest/gtest.h>

#include <random>

#include "macfact/coef.hpp"
#include "macfact/coeffs.hpp"
#include "support.hpp"

using namespace macfact;

TEST(Rational, ReducesAndNormalizesSign) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, SpillsToBigAndBack) {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000003);
  EXPECT_FALSE(big.is_small());
  Rational back = big;
  for (int i = 0; i < 40; ++i) back /= Rational(1000003);
  EXPECT_TRUE(back.is_one());
  EXPECT_TRUE(back.is_small());
  Rational copy = big;
  EXPECT_EQ(copy, big);
  EXPECT_TRUE((big - copy).is_zero());
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> d(-1'000'000'000'000LL, 1'000'000'000'000LL);
  for (int k = 0; k < 200; ++k) {
    Rational a(d(rng), d(rng) | 1), b(d(rng), d(rng) | 1), c(d(rng), d(rng) | 1);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    EXPECT_EQ(a.to_mpq() + b.to_mpq(), (a + b).to_mpq());
  }
}

TEST(Coef, RingAxiomsOnRandomValues) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    Coef a = support::random_coef(rng), b = support::random_coef(rng), c = support::random_coef(rng);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!b.is_zero()) {
      auto quo = (a * b).divide_exact(b);
      ASSERT_TRUE(quo.has_value());
      EXPECT_EQ(*quo, a);
    }
  }
}

TEST(Coef, GcdDividesBothAndRecoversCommonFactor) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    Coef a = support::random_coef(rng), b = support::random_coef(rng), g = support::random_coef(rng, 2);
    if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
    Coef d = gcd(a * g, b * g);
    EXPECT_TRUE((a * g).divide_exact(d).has_value());
    EXPECT_TRUE((b * g).divide_exact(d).has_value());
    EXPECT_TRUE(d.divide_exact(g.primitive()).has_value() || g.is_monomial() || g.is_constant());
  }
}

TEST(Coef, CyclotomicReduction) {
  Coef z = Coef::monomial(3, 0, 1);
  EXPECT_TRUE((z * z * z).is_one());
  EXPECT_TRUE((Coef(1) + z + z * z).is_zero());
  Coef i = Coef::monomial(4, 0, 1);
  EXPECT_EQ(i * i, Coef(-1));
  EXPECT_THROW(Coef::join(Coef::monomial(3, 1, 0), Coef::monomial(4, 1, 0)), std::exception);
}

TEST(Coef, FieldInverseInCyclotomicField) {
  Coef z = Coef::monomial(5, 0, 1);
  Coef k = Coef(2) + z + z * z * z;
  EXPECT_TRUE((k * field_inverse(k)).is_one());
}

TEST(SpecQT, ParsesGrammar) {
  SpecQT s = SpecQT::parse("t=u^2; q=zeta(3,1)*u^-5");
  EXPECT_EQ(s.b, 2);
  EXPECT_EQ(s.a, 5);
  EXPECT_EQ(s.m, 3);
  EXPECT_EQ(s.e, 1);
  SpecQT m = SpecQT::parse("t=u; q=-u^-2");
  EXPECT_EQ(m.m, 2);
  EXPECT_EQ(m.a, 2);
  EXPECT_EQ(SpecQT::parse("t=u^1; q=u^-3"), (SpecQT{1, 3, 1, 0}));
  EXPECT_THROW(SpecQT::parse("t=v; q=u"), std::exception);
  EXPECT_THROW(SpecQT::parse("q=u^-2"), std::exception);
}

TEST(SpecQT, AdmissibleExamples) {
  EXPECT_EQ(SpecQT::admissible(2, 2).canonical(), SpecQT::parse("t=u; q=u^-3").canonical());
  // (3,3): q = -u^-2, never u^-2
  SpecQT s33 = SpecQT::admissible(3, 3).canonical();
  EXPECT_EQ(s33, SpecQT::parse("t=u; q=-u^-2").canonical());
  // (4,5): omega a primitive cube root
  SpecQT s45 = SpecQT::admissible(5, 4).canonical();
  EXPECT_EQ(s45.m, 3);
  EXPECT_EQ(s45.b, 1);
  EXPECT_EQ(s45.a, 2);
  // (5,7): omega = +-i
  SpecQT s57 = SpecQT::admissible(7, 5).canonical();
  EXPECT_EQ(s57.m, 4);
  // t^(l+1) q^(s-1) = 1 in every case
  for (auto [l, s] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {5, 4}, {7, 5}, {4, 3}, {1, 4}}) {
    Field f = Field::special(SpecQT::admissible(l, s));
    EXPECT_TRUE(f.qt(s - 1, l + 1).is_one()) << l << "," << s;
  }
}

TEST(Field, MapsGenericElements) {
  Field f = Field::special(SpecQT::parse("t=u^2; q=u^-3"));
  Coef x = Coef::monomial(0, 1, 0) + Coef::monomial(0, 0, 1);  // q + t
  EXPECT_EQ(f.map(x), Coef::monomial(1, -3, 0) + Coef::monomial(1, 2, 0));
  EXPECT_EQ(f.qt(2, 3), Coef::monomial(1, 0, 0));
}

TEST(Frac, NormalizesAndSpecializes) {
  Coef q = Coef::monomial(0, 1, 0), t = Coef::monomial(0, 0, 1);
  Frac a(q * q - Coef(1), q - Coef(1));
  EXPECT_EQ(a, Frac(q + Coef(1)));
  Frac b(Coef(1), Coef(1) - q * t);
  EXPECT_THROW(specialize(b, Field::special(SpecQT::parse("t=u; q=u^-1"))), std::domain_error);
  Frac c = specialize(Frac(Coef(1) - q, Coef(1) - t), Field::special(SpecQT::parse("t=u; q=u^-1")));
  EXPECT_EQ(limit_at_one(c), Coef(-1));
}

TEST(Frac, LimitPole) {
  Coef u = Coef::monomial(1, 1, 0);
  EXPECT_THROW(limit_at_one(Frac(Coef(1), u - Coef(1))), std::domain_error);
  EXPECT_EQ(limit_at_one(Frac(u * u - Coef(1), u - Coef(1))), Coef(2));
}
