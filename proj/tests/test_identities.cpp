#include <gtest/gtest.h>

#include "macfact/expr.hpp"
#include "macfact/identities.hpp"
#include "macfact/macdonald.hpp"

using namespace macfact;

TEST(Proportional, BasicVerdicts) {
  VarSet v = VarSet::xs(2);
  MPoly p = parse_poly("x1^2 + q*x1*x2", v, Field());
  auto same = proportional(p, p, Mode::Exact);
  EXPECT_TRUE(same.pass);
  EXPECT_TRUE(same.scalar->is_one());
  auto twice = proportional(p.scaled(Coef(2)), p, Mode::UpToQTMonomial);
  EXPECT_TRUE(twice.pass);
  EXPECT_EQ(*twice.scalar, Frac(2));
  EXPECT_TRUE(twice.is_qt_monomial);
  EXPECT_FALSE(proportional(p.scaled(Coef(2)), p, Mode::Exact).pass);
  auto diff = proportional(parse_poly("x1+x2", v, Field()), parse_poly("x1-x2", v, Field()), Mode::UpToScalar);
  EXPECT_FALSE(diff.pass);
  ASSERT_EQ(diff.witnesses.size(), 1u);
  EXPECT_EQ(diff.witnesses[0], "x2");
  Coef nonmono = Coef(1) + Field().q();
  auto scaled = proportional(p.scaled(nonmono), p, Mode::UpToQTMonomial);
  EXPECT_FALSE(scaled.pass);
  EXPECT_TRUE(proportional(p.scaled(nonmono), p, Mode::UpToScalar).pass);
}

TEST(Proportional, ScalesAreDividedOut) {
  VarSet v = VarSet::xs(1);
  MPoly p = parse_poly("x1 - q", v, Field());
  Coef t = Field().t();
  EXPECT_TRUE(proportional(p.scaled(t), p, Mode::Exact, t).pass);
}

TEST(Wheel, TuplesAndChecks) {
  SpecQT s = SpecQT::parse("t=u; q=u^-3");
  auto tuples = wheel_tuples(2, 2, s);
  EXPECT_EQ(tuples.size(), 3u);
  for (const auto& a : tuples) EXPECT_EQ(a[0] + a[1] + a[2], 1);
  Field f = Field::special(s);
  auto p = build({4, 2, 2, 0, 0}, Kind::P, f);
  EXPECT_TRUE(wheel_check(p->poly, 2, 2, s).pass);
  auto small = build({1, 0, 0}, Kind::P, f);
  EXPECT_FALSE(wheel_check(small->poly, 2, 2, s).pass);
  EXPECT_TRUE(wheel_check(MPoly(VarSet::xs(3)), 2, 2, s).pass);
}

TEST(Principal, ProductAndChain) {
  Composition lam{6, 6, 4, 3, 3, 1, 1, 1, 0};
  EXPECT_EQ(parts_at_most(lam, 0), 1);
  EXPECT_EQ(parts_at_most(lam, 3), 6);
  PrincipalChain ch = principal_chain(lam);
  EXPECT_EQ(ch.steps.size(), 8u);
  EXPECT_EQ(ch.steps.back().index, (Composition{0, 0}));
  EXPECT_TRUE(proportional(ch.product, ch.expected, Mode::UpToScalar).pass);
  VarSet v = VarSet::xs(2);
  MPoly printed = parse_poly(
      "(x1-t)*(x2-t)*(x1-q*t^4)*(x2-q*t^4)*(x1-q^2*t^4)*(x2-q^2*t^4)*(x1-q^3*t^6)*(x2-q^3*t^6)*(x1-q^4*t^7)*"
      "(x2-q^4*t^7)*(x1-q^5*t^7)*(x2-q^5*t^7)",
      v, Field());
  EXPECT_TRUE(proportional(ch.expected, printed, Mode::Exact).pass);
}

TEST(Principal, ChainAgreesWithBuilds) {
  for (const auto& lam : std::vector<Composition>{{3, 2, 0}, {2, 1, 1, 0}, {3, 3, 1, 0}}) {
    PrincipalChain ch = principal_chain(lam);
    int m = ch.product.nvars();
    VarSet v = VarSet::xs(m);
    Field g;
    auto r = build(lam, Kind::MS, g);
    std::vector<Letter> letters;
    for (int i = 0; i < m; ++i) letters.push_back(Letter{Coef(1), i});
    auto tail = reciprocal_letters(Composition(lam.begin() + m, lam.end()), g);
    letters.insert(letters.end(), tail.begin(), tail.end());
    MPoly lhs = substitute(r->poly, EvalAlphabet{v, letters});
    EXPECT_TRUE(proportional(lhs, ch.product, Mode::UpToScalar).pass) << composition_str(lam);
  }
}

TEST(Resultant, ExpandsPairs) {
  VarSet v({"x", "y"});
  Field g;
  MPoly r = resultant({Letter{Coef(1), 0}}, geometric(g.q(), 2, 1, g.t()), v);
  EXPECT_EQ(r, parse_poly("(x-t*y)*(x-q*t*y)", v, g));
}

TEST(Params, Parsing) {
  auto p = parse_params("l=2,k=1,spec=t=u; q=u^-3,index=[4,2,0]");
  EXPECT_EQ(p["l"], 2);
  EXPECT_EQ(p["spec"], "t=u; q=u^-3");
  EXPECT_EQ(p["index"], "[4,2,0]");
  EXPECT_THROW(parse_params("l2"), std::invalid_argument);
}

TEST(Corpus, RejectsMalformed) {
  using nlohmann::json;
  EXPECT_THROW(parse_corpus(json::object()), std::invalid_argument);
  EXPECT_THROW(parse_corpus(json::parse(R"([{"name":"a","family":"nope"}])")), std::invalid_argument);
  EXPECT_THROW(parse_corpus(json::parse(R"([{"name":"a","family":"wheel"},{"name":"a","family":"wheel"}])")),
               std::invalid_argument);
  auto bad = parse_corpus(json::parse(R"([{"name":"a","family":"explicit","vars":["x"],"lhs":"x+","rhs":"x"}])"));
  CaseReport r = run_case(bad[0]);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.error.rfind("case a:", 0), 0u);
}

TEST(Corpus, OverridesReplaceParameters) {
  auto cases = load_corpus(default_corpus_path());
  auto it = std::find_if(cases.begin(), cases.end(), [](const IdentityCase& c) { return c.name == "fact-wheel"; });
  ASSERT_NE(it, cases.end());
  CaseReport r = run_case(*it, parse_params("l=1,k=1,s=2,beta=1"));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.to_json()["verdict"], "pass");
}

TEST(Corpus, SeedChangesRandomGrid) {
  auto cases = load_corpus(default_corpus_path());
  auto it = std::find_if(cases.begin(), cases.end(), [](const IdentityCase& c) { return c.name == "saturate-P"; });
  ASSERT_NE(it, cases.end());
  CaseReport a = run_case(*it, nullptr, 1), b = run_case(*it, nullptr, 2), c = run_case(*it, nullptr, 1);
  EXPECT_TRUE(a.pass && b.pass);
  EXPECT_EQ(a.checks.size(), 20u);
  std::vector<std::string> la, lb, lc;
  for (auto& k : a.checks) la.push_back(k.label);
  for (auto& k : b.checks) lb.push_back(k.label);
  for (auto& k : c.checks) lc.push_back(k.label);
  EXPECT_NE(la, lb);
  EXPECT_EQ(la, lc);
}

class CorpusCase : public ::testing::TestWithParam<std::string> {};

TEST_P(CorpusCase, Passes) {
  auto cases = load_corpus(default_corpus_path());
  auto it = std::find_if(cases.begin(), cases.end(), [&](const IdentityCase& c) { return c.name == GetParam(); });
  ASSERT_NE(it, cases.end());
  CaseReport r = run_case(*it);
  EXPECT_TRUE(r.pass) << r.to_json().dump(1);
}

namespace {

std::vector<std::string> fast_case_names() {
  std::vector<std::string> out;
  for (const auto& c : load_corpus(default_corpus_path()))
    if (!c.slow) out.push_back(c.name);
  return out;
}

}  // namespace

INSTANTIATE_TEST_SUITE_P(All, CorpusCase, ::testing::ValuesIn(fast_case_names()),
                         [](const ::testing::TestParamInfo<std::string>& i) {
                           std::string s = i.param;
                           for (char& ch : s)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return s;
                         });
