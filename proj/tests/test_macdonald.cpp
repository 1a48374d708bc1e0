#include <gtest/gtest.h>

#include "macfact/expr.hpp"
#include "macfact/hecke.hpp"
#include "macfact/identities.hpp"
#include "macfact/macdonald.hpp"

using namespace macfact;

namespace {

FracPoly monic(const Composition& v, Kind k, const Field& f = Field()) { return build(v, k, f)->monic(); }

FracPoly parse_frac(const std::string& s, const VarSet& v, const Field& f = Field()) {
  return to_frac_poly(parse_poly(s, v, f));
}

}  // namespace

TEST(Macdonald, ConstantsAndDegreeOne) {
  EXPECT_EQ(monic({0, 0}, Kind::E).str(), "1");
  EXPECT_EQ(monic({0, 0, 0}, Kind::M).str(), "1");
  VarSet v = VarSet::xs(2);
  EXPECT_EQ(monic({1, 1}, Kind::P), parse_frac("x1*x2", v));
}

// P_2 = m_2 + (1+q)(1-t)/(1-qt) m_11
TEST(Macdonald, TwoRowClosedForm) {
  VarSet v = VarSet::xs(2);
  FracPoly p = monic({2, 0}, Kind::P);
  Coef q = Field().q(), t = Field().t();
  Frac c((Coef(1) + q) * (Coef(1) - t), Coef(1) - q * t);
  FracPoly expect = to_frac_poly(parse_poly("x1^2+x2^2", v, Field()));
  expect.terms.insert(expect.terms.begin() + 1, {make_exp({1, 1}), c});
  EXPECT_EQ(p, expect);
}

TEST(Macdonald, SchurAtQEqualsT) {
  Field f = Field::special(SpecQT::parse("t=u; q=u"));
  VarSet v = VarSet::xs(3);
  EXPECT_EQ(monic({2, 1, 0}, Kind::P, f),
            parse_frac("x1^2*x2+x1^2*x3+x2^2*x1+x2^2*x3+x3^2*x1+x3^2*x2+2*x1*x2*x3", v, f));
}

TEST(Macdonald, SymmetricIsSymmetrizedNonsymmetric) {
  Field g;
  for (const auto& lam : std::vector<Composition>{{2, 1, 0}, {3, 1}, {2, 2, 1}}) {
    auto e = build(sorted_shape(lam), Kind::E, g);
    Composition rev(lam.rbegin(), lam.rend());
    auto er = build(rev, Kind::E, g);
    MPoly s = symmetrize(er->poly, g);
    auto p = build(lam, Kind::P, g);
    EXPECT_TRUE(proportional(s, p->poly, Mode::UpToScalar).pass) << composition_str(lam);
  }
}

TEST(Macdonald, SpectralSmall) {
  for (const auto& v : compositions_up_to(3, 3)) {
    EXPECT_TRUE(spectral_check(v, Kind::E).pass()) << composition_str(v);
    EXPECT_TRUE(spectral_check(v, Kind::M).pass()) << composition_str(v);
  }
}

TEST(Macdonald, VanishingSmall) {
  for (const auto& v : compositions_up_to(3, 3)) EXPECT_TRUE(vanishing_check(v, Kind::M).pass()) << composition_str(v);
  for (const auto& v : partitions_up_to(3, 4)) EXPECT_TRUE(vanishing_check(v, Kind::MS).pass()) << composition_str(v);
}

TEST(Macdonald, TopDegreeOfShiftedIsHomogeneousVersion) {
  Field g;
  for (const auto& v : compositions_up_to(3, 3)) {
    auto m = build(v, Kind::M, g);
    auto e = build(v, Kind::E, g);
    MPoly top = m->poly.degree_part(weight(v));
    EXPECT_TRUE(proportional(top, e->poly, Mode::UpToScalar).pass) << composition_str(v);
  }
}

TEST(Macdonald, PathIndependence) {
  int distinct = 0;
  for (const auto& v : compositions_up_to(3, 4)) {
    auto a = yb_path(v, PathRule::AffineFirst), b = yb_path(v, PathRule::DescentFirst);
    if (a == b) continue;
    ++distinct;
    for (Kind k : {Kind::E, Kind::M})
      EXPECT_EQ(build_along_path(v, k, Field(), a).monic(), build_along_path(v, k, Field(), b).monic()) << composition_str(v);
  }
  EXPECT_GE(distinct, 10);
}

TEST(Macdonald, SpecializedBuildAgreesWithGenericSpecialized) {
  Field f = Field::special(SpecQT::parse("t=u^2; q=u^-3"));
  for (const auto& v : compositions_up_to(3, 3)) {
    for (Kind k : {Kind::E, Kind::M}) {
      auto gen = build(v, k, Field());
      BuildReport s;
      try {
        s = specialize_build(*gen, f);
      } catch (const std::domain_error&) {
        continue;
      }
      EXPECT_EQ(build(v, k, f)->monic(), s.monic()) << composition_str(v);
    }
  }
}

TEST(Macdonald, PerturbedRouteMatchesGenericWhereBothExist) {
  Field f = Field::special(SpecQT::parse("t=u; q=u^-3"));
  Composition v{1, 0, 1, 0};
  BuildReport p = perturbed_build(v, Kind::E, f);
  BuildReport s = specialize_build(*build(v, Kind::E, Field()), f);
  EXPECT_EQ(p.monic(), s.monic());
}

TEST(Macdonald, SingularEdgeIsRouted) {
  // [4,2,2,0,0] at t=u, q=u^-3 meets a vanishing edge denominator on the default path
  Field f = Field::special(SpecQT::parse("t=u; q=u^-3"));
  auto r = build({4, 2, 2, 0, 0}, Kind::MS, f);
  EXPECT_FALSE(r->poly.is_zero());
  EXPECT_TRUE(r->poly.homogeneous_degree().has_value());
}

TEST(Macdonald, MS32Golden) {
  VarSet v = VarSet::xs(2);
  auto r = build({3, 2}, Kind::MS, Field());
  MPoly expect = parse_poly("(q^2*t+q^2-x1-x2)*(x2-1)*(x1-1)*(q-x2)*(q-x1)", v, Field());
  auto rep = proportional(r->poly, expect, Mode::UpToQTMonomial, r->scale);
  EXPECT_TRUE(rep.pass) << rep.note;
}

TEST(Macdonald, CacheReturnsSameObject) {
  auto a = build({2, 1, 0}, Kind::E, Field());
  auto b = build({2, 1, 0}, Kind::E, Field());
  EXPECT_EQ(a.get(), b.get());
  EXPECT_GT(cache_size(), 0u);
}

TEST(Macdonald, RejectsBadInput) {
  EXPECT_THROW(build({2, 1, 3}, Kind::P, Field()), std::invalid_argument);
  EXPECT_THROW(build(Composition(13, 0), Kind::E, Field()), std::invalid_argument);
}
