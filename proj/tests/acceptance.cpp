// Acceptance run: one PASS/FAIL line per criterion, each within its time budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>

#include "macfact/expr.hpp"
#include "macfact/hecke.hpp"
#include "macfact/identities.hpp"
#include "macfact/jack.hpp"
#include "macfact/macdonald.hpp"

using namespace macfact;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<IdentityCase> g_corpus;

const IdentityCase& corpus_case(const std::string& name) {
  for (const auto& c : g_corpus)
    if (c.name == name) return c;
  throw std::runtime_error("missing corpus case " + name);
}

// Runs named cases; all must pass.
Outcome run_cases(const std::vector<std::pair<std::string, std::string>>& names, std::string* scalars = nullptr) {
  Outcome o{true, ""};
  int checks = 0;
  for (const auto& [name, params] : names) {
    CaseReport r = run_case(corpus_case(name), params.empty() ? nlohmann::json(nullptr) : parse_params(params));
    checks += static_cast<int>(r.checks.size());
    if (!r.pass) {
      o.pass = false;
      o.detail += " " + name + (r.error.empty() ? " failed" : " error: " + r.error);
    }
    if (scalars && !r.checks.empty() && r.checks.front().report.scalar)
      *scalars += " " + name + " scalar " + r.checks.front().report.scalar->str() + ";";
  }
  if (o.pass) o.detail = std::to_string(names.size()) + " cases, " + std::to_string(checks) + " checks";
  return o;
}

MPoly random_poly(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> deg(0, 3), coef(-3, 3), qt(-1, 2);
  std::vector<MPoly::Term> ts;
  for (int k = 0; k < 4; ++k) {
    std::vector<int> e(n);
    for (int& x : e) x = deg(rng);
    int c = coef(rng);
    ts.emplace_back(make_exp(e), Coef::monomial(0, qt(rng), qt(rng), Rational(c == 0 ? 1 : c)));
  }
  return MPoly::from_terms(VarSet::xs(n), ts);
}

Outcome crit_hecke_laws() {
  std::mt19937_64 rng(2024);
  Field g;
  Coef t = g.t();
  int braid = 0, comm = 0, quad = 0;
  for (int n : {2, 3, 4}) {
    for (int k = 0; k < 100; ++k) {
      MPoly f = random_poly(rng, n);
      for (int i = 1; i < n; ++i) {
        MPoly a = apply_hecke(f, i, false, g);
        if (!(apply_hecke(a, i, false, g) - a.scaled(t - Coef(1)) - f.scaled(t)).is_zero()) return {false, "quadratic"};
        ++quad;
      }
      for (int i = 1; i + 1 < n; ++i) {
        if (!(apply_word(f, {i, i + 1, i}, g) == apply_word(f, {i + 1, i, i + 1}, g))) return {false, "braid"};
        ++braid;
      }
      for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
          if (!(apply_word(f, {i, j}, g) == apply_word(f, {j, i}, g))) return {false, "commutation"};
          ++comm;
        }
    }
  }
  bool enough = quad >= 300 && braid >= 200 && comm >= 100;
  return {enough, "quadratic " + std::to_string(quad) + ", braid " + std::to_string(braid) + ", commutation " +
                      std::to_string(comm) + " instances"};
}

Outcome crit_spectral() {
  int n = 0;
  for (int len = 1; len <= 3; ++len)
    for (const auto& v : compositions_up_to(len, 4)) {
      for (Kind k : {Kind::E, Kind::M})
        if (!spectral_check(v, k).pass()) return {false, kind_str(k) + composition_str(v)};
      ++n;
    }
  return {true, std::to_string(n) + " compositions, E and M"};
}

Outcome crit_vanishing() {
  int n = 0;
  for (const auto& v : compositions_up_to(3, 4)) {
    if (!vanishing_check(v, Kind::M, Field(), 1000).pass()) return {false, "M" + composition_str(v)};
    ++n;
  }
  for (const auto& v : partitions_up_to(3, 4)) {
    if (!vanishing_check(v, Kind::MS, Field(), 1000).pass()) return {false, "MS" + composition_str(v)};
    ++n;
  }
  return {true, std::to_string(n) + " indices"};
}

Outcome crit_ms32() {
  VarSet v = VarSet::xs(2);
  auto r = build({3, 2}, Kind::MS, Field());
  MPoly expect = parse_poly("(q^2*t+q^2-x1-x2)*(x2-1)*(x1-1)*(q-x2)*(q-x1)", v, Field());
  CheckReport rep = proportional(r->poly, expect, Mode::UpToQTMonomial, r->scale);
  return {rep.pass, rep.scalar ? "scalar " + rep.scalar->str() : rep.note};
}

Outcome crit_saturated_standard() {
  Outcome o = run_cases({{"saturate-P", ""}, {"saturate-MS", ""}, {"standard-spec", ""}});
  if (!o.pass) return o;
  for (const char* name : {"saturate-P", "saturate-MS", "standard-spec"}) {
    CaseReport r = run_case(corpus_case(name));
    int distinct = static_cast<int>(r.checks.size()) / (std::string(name) == "standard-spec" ? 2 : 1);
    if (distinct < 20) return {false, std::string(name) + " has only " + std::to_string(distinct) + " partitions"};
  }
  return o;
}

Outcome crit_reciprocal() {
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
  if (inside.size() != table.size()) return {false, "partition count"};
  for (const auto& mu : inside) {
    auto it = table.find(composition_str(mu));
    if (it == table.end()) return {false, "unexpected " + composition_str(mu)};
    Coef gen = reciprocal_sum(mu);
    if (!(gen == parse_coef(it->second.first, 0)) || !(f.map(gen) == parse_coef(it->second.second, 1)))
      return {false, "table entry " + it->first};
  }
  const IdentityCase& c = corpus_case("qs-reciprocal");
  std::vector<nlohmann::json> runs{c.data.at("params")};
  for (const auto& g : c.data.at("grid")) {
    nlohmann::json p = c.data.at("params");
    p.update(g);
    runs.push_back(p);
  }
  for (const auto& p : runs) {
    Composition lam = quasistaircase(QSParams{p["l"], p["k"], p["s"], p["r"], p["beta"]});
    if (weight(lam) > 12) return {false, "grid instance above weight 12: " + composition_str(lam)};
  }
  Outcome o = run_cases({{"qs-reciprocal", ""}});
  if (o.pass) o.detail = "12 table entries, " + std::to_string(runs.size()) + " quasistaircases";
  return o;
}

Outcome crit_jack_clustering() {
  std::string scalars;
  Outcome o = run_cases({{"jack-cluster-53", ""}, {"jack-qs", "l=1,k=1,s=2,r=0,beta=1"}}, &scalars);
  o.detail += ";" + scalars;
  return o;
}

Outcome crit_nonsym() {
  std::vector<std::pair<std::string, std::string>> names;
  for (const auto& c : g_corpus)
    if (c.name.rfind("nonsym-", 0) == 0) names.emplace_back(c.name, "");
  return run_cases(names);
}

Outcome crit_path_independence() {
  int n = 0;
  for (int len = 2; len <= 4; ++len)
    for (const auto& v : compositions_up_to(len, len == 4 ? 3 : 4)) {
      auto a = yb_path(v, PathRule::AffineFirst), b = yb_path(v, PathRule::DescentFirst);
      if (a == b) continue;
      for (Kind k : {Kind::E, Kind::M})
        if (!(build_along_path(v, k, Field(), a).monic() == build_along_path(v, k, Field(), b).monic()))
          return {false, kind_str(k) + composition_str(v)};
      ++n;
    }
  return {n >= 10, std::to_string(n) + " compositions with two distinct paths"};
}

Outcome crit_principal_chain() { return run_cases({{"principal-chain", ""}}); }

Outcome crit_staircase_suite() {
  return run_cases({{"staircase-homogeneous", "l=2,k=1,s=2,beta=1"},
                    {"first-fact-wheel", "l=2,k=1,s=2,beta=1"},
                    {"first-fact-wheel-example", ""},
                    {"fact-wheel", "l=2,k=1,s=2,beta=1"},
                    {"fact-wheel-example", ""}});
}

Outcome crit_quasistaircase_suite() {
  return run_cases({{"qs-homogeneous", ""}, {"qs-omega", ""}, {"last-fact-example", ""}});
}

}  // namespace

int main() {
  try {
    g_corpus = load_corpus(default_corpus_path());
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  struct Criterion {
    std::string label;
    double budget;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {"Hecke relations on random polynomials", 30, crit_hecke_laws},
      {"spectral vectors, N<=3, |v|<=4", 60, crit_spectral},
      {"interpolation vanishing, N=3, |v|<=4", 60, crit_vanishing},
      {"MS_32 product form", 5, crit_ms32},
      {"saturated and standard specialization grids", 120, crit_saturated_standard},
      {"principal evaluation chain [6,6,4,3,3,1,1,1,0]", 60, crit_principal_chain},
      {"reciprocal sums inside [4,2,0] and uniqueness", 30, crit_reciprocal},
      {"staircase wheel suite", 120, crit_staircase_suite},
      {"quasistaircase suite", 180, crit_quasistaircase_suite},
      {"Jack clustering", 120, crit_jack_clustering},
      {"nonsymmetric factorizations", 120, crit_nonsym},
      {"path independence", 30, crit_path_independence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    clear_cache();
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.pass && secs < all[i].budget;
    if (o.pass && !ok) o.detail += "; over the time budget";
    if (!ok) ++failed;
    std::printf("%s %2zu %s (%.1fs / %.0fs) %s\n", ok ? "PASS" : "FAIL", i + 1, all[i].label.c_str(), secs, all[i].budget,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
