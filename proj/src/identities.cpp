#include "macfact/identities.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "macfact/expr.hpp"
#include "macfact/jack.hpp"
#include "macfact/macdonald.hpp"

#ifndef MACFACT_CORPUS_DIR
#define MACFACT_CORPUS_DIR "corpus"
#endif

namespace macfact {

using nlohmann::json;

Mode parse_mode(std::string_view s) {
  if (s == "Exact") return Mode::Exact;
  if (s == "UpToScalar") return Mode::UpToScalar;
  if (s == "UpToQTMonomial") return Mode::UpToQTMonomial;
  throw std::invalid_argument("unknown mode: " + std::string(s));
}

std::string mode_str(Mode m) {
  switch (m) {
    case Mode::Exact:
      return "Exact";
    case Mode::UpToScalar:
      return "UpToScalar";
    case Mode::UpToQTMonomial:
      return "UpToQTMonomial";
  }
  return "?";
}

namespace {

std::string monomial_str(const VarSet& vars, const Exp& e) { return MPoly::monomial(vars, e, Coef(1)).str(); }

}  // namespace

CheckReport proportional(const MPoly& P, const MPoly& Q, Mode mode, const Coef& p_scale, const Coef& q_scale) {
  CheckReport rep;
  if (P.is_zero() || Q.is_zero()) {
    rep.note = P.is_zero() && Q.is_zero() ? "both sides vanish" : P.is_zero() ? "left side vanishes" : "right side vanishes";
    return rep;
  }
  if (!(P.vars() == Q.vars())) {
    rep.note = "variable sets differ";
    return rep;
  }
  const Exp& lead = P.leading().first;
  const Coef& cp = P.leading().second;
  Coef cq = Q.coefficient(lead);
  if (cq.is_zero()) {
    rep.witnesses.push_back(monomial_str(P.vars(), lead));
    rep.note = "right side lacks the leading monomial";
    return rep;
  }
  // cq * P == cp * Q, term by term
  const auto& a = P.terms();
  const auto& b = Q.terms();
  std::size_t i = 0, j = 0;
  auto note = [&](const Exp& e) {
    if (rep.witnesses.size() < 8) rep.witnesses.push_back(monomial_str(P.vars(), e));
  };
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      note(a[i++].first);
    } else if (i >= a.size() || b[j].first < a[i].first) {
      note(b[j++].first);
    } else {
      if (!(cq * a[i].second == cp * b[j].second)) note(a[i].first);
      ++i;
      ++j;
    }
  }
  Frac c = Frac(cp * q_scale, cq * p_scale);
  rep.scalar = c;
  rep.is_qt_monomial = c.is_monomial();
  bool prop = rep.witnesses.empty();
  switch (mode) {
    case Mode::Exact:
      rep.pass = prop && c.is_one();
      if (prop && !c.is_one()) rep.note = "proportional but not equal";
      break;
    case Mode::UpToQTMonomial:
      rep.pass = prop && rep.is_qt_monomial;
      if (prop && !rep.is_qt_monomial) rep.note = "scalar is not a monomial in q and t";
      break;
    case Mode::UpToScalar:
      rep.pass = prop;
      break;
  }
  return rep;
}

std::vector<std::vector<int>> wheel_tuples(int l, int s, const SpecQT& spec) {
  Field f = Field::special(spec);
  std::vector<std::vector<int>> out;
  std::vector<int> a(l + 1, 0);
  for (;;) {
    int sum = 0;
    for (int x : a) sum += x;
    if (f.qt(sum, l + 1).is_one()) out.push_back(a);
    int k = 0;
    while (k <= l && ++a[k] == s) a[k++] = 0;
    if (k > l) break;
  }
  return out;
}

CheckReport wheel_check(const MPoly& P, int l, int s, const SpecQT& spec) {
  CheckReport rep;
  rep.pass = true;
  if (P.is_zero()) {
    rep.note = "zero polynomial";
    return rep;
  }
  int n = P.nvars();
  if (n < l + 1) throw std::invalid_argument("wheel condition needs at least l+1 variables");
  Field f = Field::special(spec);
  std::vector<std::string> names{P.vars().name(0)};
  for (int i = l + 1; i < n; ++i) names.push_back(P.vars().name(i));
  VarSet target(names);
  auto tuples = wheel_tuples(l, s, spec);
  for (const auto& a : tuples) {
    EvalAlphabet alpha;
    alpha.target = target;
    Coef sc(1);
    alpha.letters.push_back(Letter{sc, 0});
    for (int j = 0; j < l; ++j) {
      sc = sc * f.qt(a[j], 1);
      alpha.letters.push_back(Letter{sc, 0});
    }
    for (int i = l + 1; i < n; ++i) alpha.letters.push_back(Letter{Coef(1), i - l});
    if (!substitute(P, alpha).is_zero()) {
      rep.pass = false;
      std::string w = "a=(";
      for (std::size_t k = 0; k < a.size(); ++k) w += (k ? "," : "") + std::to_string(a[k]);
      rep.witnesses.push_back(w + ")");
    }
  }
  rep.note = std::to_string(tuples.size()) + " wheel tuples";
  return rep;
}

namespace {

MPoly letter_poly(const Letter& l, const VarSet& vars) {
  if (l.var < 0) return MPoly::constant(vars, l.scale);
  return MPoly::variable(vars, l.var, l.scale);
}

}  // namespace

MPoly resultant(const std::vector<Letter>& X, const std::vector<Letter>& Y, const VarSet& vars) {
  MPoly out = MPoly::constant(vars, Coef(1));
  for (const auto& x : X)
    for (const auto& y : Y) out = out * (letter_poly(x, vars) - letter_poly(y, vars));
  return out;
}

std::vector<Letter> geometric(const Coef& ratio, int n, int var, const Coef& start) {
  std::vector<Letter> out;
  Coef c = start;
  for (int k = 0; k < n; ++k) {
    out.push_back(Letter{c, var});
    c = c * ratio;
  }
  return out;
}

std::vector<Letter> reciprocal_letters(const Composition& v, const Field& field) {
  std::vector<Letter> out;
  for (const auto& c : reciprocal_point(v, field)) out.push_back(Letter{c, -1});
  return out;
}

int parts_at_most(const Composition& lambda, int j) {
  return static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [j](int x) { return x <= j; }));
}

namespace {

int top_multiplicity(const Composition& lambda) {
  if (lambda.empty()) return 0;
  int top = *std::max_element(lambda.begin(), lambda.end());
  return static_cast<int>(std::count(lambda.begin(), lambda.end(), top));
}

}  // namespace

MPoly principal_product(const Composition& lambda, const Field& field) {
  int m = top_multiplicity(lambda);
  int top = lambda.empty() ? 0 : *std::max_element(lambda.begin(), lambda.end());
  if (top == 0) m = static_cast<int>(lambda.size());
  VarSet vars = VarSet::xs(m);
  MPoly out = MPoly::constant(vars, Coef(1));
  for (int j = 0; j < top; ++j)
    for (int i = 0; i < m; ++i)
      out = out * (MPoly::variable(vars, i) - MPoly::constant(vars, field.qt(j, parts_at_most(lambda, j))));
  return out;
}

PrincipalChain principal_chain(const Composition& lambda) {
  if (!is_partition(lambda) || lambda.empty()) throw std::invalid_argument("principal chain needs a partition");
  PrincipalChain out;
  int m = top_multiplicity(lambda);
  if (lambda[0] == 0) m = static_cast<int>(lambda.size());
  VarSet vars = VarSet::xs(m);
  Field gen;
  out.product = MPoly::constant(vars, Coef(1));
  out.expected = principal_product(lambda, gen);
  Composition w = lambda;
  QMono c{0, 0};
  auto nonzero = [&]() { return std::any_of(w.begin(), w.end(), [](int x) { return x != 0; }); };
  while (nonzero()) {
    if (w.back() == 0) {
      int k = 0;
      while (!w.empty() && w.back() == 0) {
        w.pop_back();
        ++k;
      }
      c.texp -= k;
      out.steps.push_back(ChainStep{"standard", w, c});
    } else {
      int p = w.back();
      for (int k = 0; k < p; ++k)
        for (int i = 0; i < m; ++i)
          out.product = out.product * (MPoly::variable(vars, i, gen.qt(c.qexp, c.texp)) - MPoly::constant(vars, gen.qt(k, 0)));
      for (int& x : w) x -= p;
      c.qexp -= p;
      out.steps.push_back(ChainStep{"saturated", w, c});
    }
  }
  return out;
}

// ---------------------------------------------------------------- case machinery

namespace {

using Rng = std::mt19937_64;
using Checks = std::vector<NamedCheck>;

int geti(const json& p, const char* key, int def) {
  if (!p.contains(key)) return def;
  const auto& v = p.at(key);
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) return std::stoi(v.get<std::string>());
  throw std::invalid_argument(std::string("parameter ") + key + " must be an integer");
}

std::string gets(const json& p, const char* key, const std::string& def) {
  if (!p.contains(key)) return def;
  const auto& v = p.at(key);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

Field field_from(const json& p, const Field& def) {
  if (!p.contains("spec")) return def;
  std::string s = gets(p, "spec", "");
  if (s == "generic") return Field();
  return Field::special(SpecQT::parse(s));
}

Field admissible_field(const json& p, int l, int s) {
  return field_from(p, Field::special(SpecQT::admissible(l, s, geti(p, "omega", 0))));
}

struct Side {
  MPoly poly;
  Coef scale = Coef(1);
};

Side built(const Composition& v, Kind kind, const Field& f) {
  auto r = build(v, kind, f);
  return Side{r->poly, r->scale};
}

Side at(const Side& s, const VarSet& vars, std::vector<Letter> letters) {
  EvalAlphabet a{vars, std::move(letters)};
  return Side{substitute(s.poly, a), s.scale};
}

Side mul(Side a, const Side& b) {
  a.poly = a.poly * b.poly;
  a.scale = a.scale * b.scale;
  return a;
}

Side plain(MPoly p) { return Side{std::move(p), Coef(1)}; }

NamedCheck compare(std::string label, const Side& lhs, const Side& rhs, Mode mode) {
  return NamedCheck{std::move(label), proportional(lhs.poly, rhs.poly, mode, lhs.scale, rhs.scale)};
}

NamedCheck homogeneity(std::string label, const MPoly& f) {
  CheckReport r;
  auto d = f.is_zero() ? std::nullopt : f.homogeneous_degree();
  r.pass = d.has_value();
  r.note = d ? "degree " + std::to_string(*d) : "not homogeneous";
  return NamedCheck{std::move(label), r};
}

std::vector<Letter> xs_letters(int n, int offset = 0, const Coef& scale = Coef(1)) {
  std::vector<Letter> out;
  for (int i = 0; i < n; ++i) out.push_back(Letter{scale, offset + i});
  return out;
}

std::vector<Letter> cat(std::vector<Letter> a, const std::vector<Letter>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

VarSet xy_vars(int nx, int y_from, int y_to) {
  std::vector<std::string> names;
  for (int i = 1; i <= nx; ++i) names.push_back("x" + std::to_string(i));
  for (int j = y_from; j <= y_to; ++j) names.push_back("y" + std::to_string(j));
  return VarSet(names);
}

std::string label_of(const Composition& v) { return composition_str(v); }

Composition drop_last(const Composition& v, int k) { return Composition(v.begin(), v.end() - k); }

template <class T>
std::vector<T> sample(std::vector<T> all, int count, Rng& rng) {
  std::shuffle(all.begin(), all.end(), rng);
  if (count >= 0 && static_cast<int>(all.size()) > count) all.resize(count);
  return all;
}

// ---- Prop. on saturated partitions

Checks fam_saturate(const json& p, Rng& rng) {
  Kind kind = parse_kind(gets(p, "kind", "MS"));
  std::vector<Composition> lambdas;
  if (p.contains("index")) {
    lambdas.push_back(parse_composition(gets(p, "index", "")));
  } else {
    std::vector<Composition> all;
    for (int n = geti(p, "nmin", 2); n <= geti(p, "nmax", 4); ++n)
      for (auto& l : partitions_up_to(n, geti(p, "wmax", 8)))
        if (l.back() > 0) all.push_back(l);
    lambdas = sample(all, geti(p, "count", 20), rng);
  }
  Field gen = field_from(p, Field());
  Checks out;
  for (const auto& lam : lambdas) {
    int n = static_cast<int>(lam.size());
    int last = lam.back();
    if (last <= 0) throw std::invalid_argument("saturated partition expected: " + label_of(lam));
    Composition mu = lam;
    for (int& x : mu) x -= last;
    VarSet vars = VarSet::xs(n);
    Side lhs = built(lam, kind, gen);
    if (kind == Kind::P || kind == Kind::E) {
      Exp e{};
      for (int i = 0; i < n; ++i) e[i] = static_cast<std::int16_t>(last);
      Side rhs = built(mu, kind, gen);
      rhs.poly = rhs.poly.shifted(e);
      out.push_back(compare(label_of(lam), lhs, rhs, Mode::Exact));
    } else {
      MPoly pre = MPoly::constant(vars, Coef(1));
      for (int k = 0; k < last; ++k)
        for (int i = 0; i < n; ++i) pre = pre * (MPoly::variable(vars, i) - MPoly::constant(vars, gen.qt(k, 0)));
      Side rhs = mul(plain(pre), at(built(mu, kind, gen), vars, xs_letters(n, 0, gen.qt(-last, 0))));
      out.push_back(compare(label_of(lam), lhs, rhs, Mode::UpToScalar));
    }
  }
  return out;
}

// ---- Prop. on standard specializations

Checks fam_standard(const json& p, Rng& rng) {
  std::vector<Composition> lambdas;
  if (p.contains("index")) {
    lambdas.push_back(parse_composition(gets(p, "index", "")));
  } else {
    std::vector<Composition> all;
    int nmax = geti(p, "nmax", 4);
    for (int n = 1; n < nmax; ++n)
      for (auto& l : partitions_up_to(n, geti(p, "wmax", 7)))
        if (l.back() > 0)
          for (int k = 1; n + k <= nmax; ++k) {
            Composition v = l;
            v.insert(v.end(), k, 0);
            all.push_back(v);
          }
    lambdas = sample(all, geti(p, "count", 20), rng);
  }
  Field gen = field_from(p, Field());
  Checks out;
  for (const auto& lam : lambdas) {
    int k = 0;
    while (k < static_cast<int>(lam.size()) && lam[lam.size() - 1 - k] == 0) ++k;
    int n = static_cast<int>(lam.size()) - k;
    if (k == 0 || n == 0) throw std::invalid_argument("standard specialization needs trailing zeros and a nonzero part: " + label_of(lam));
    Composition head = drop_last(lam, k);
    int last = head.back();
    Composition mu = head;
    for (int& x : mu) x -= last;
    VarSet vars = VarSet::xs(n);
    Side lhs = at(built(lam, Kind::MS, gen), vars, cat(xs_letters(n), geometric(gen.t(), k, -1)));
    Side mid = at(built(head, Kind::MS, gen), vars, xs_letters(n, 0, gen.qt(0, -k)));
    MPoly pre = MPoly::constant(vars, Coef(1));
    for (int j = 0; j < last; ++j)
      for (int i = 0; i < n; ++i) pre = pre * (MPoly::variable(vars, i) - MPoly::constant(vars, gen.qt(j, k)));
    Side rhs = mul(plain(pre), at(built(mu, Kind::MS, gen), vars, xs_letters(n, 0, gen.qt(-last, -k))));
    out.push_back(compare(label_of(lam) + " first", lhs, mid, Mode::UpToScalar));
    out.push_back(compare(label_of(lam) + " second", mid, rhs, Mode::UpToScalar));
  }
  return out;
}

// ---- principal chain with the floor(lambda)_j product

Checks fam_principal(const json& p, Rng& rng) {
  std::vector<Composition> lambdas;
  if (p.contains("index")) {
    lambdas.push_back(parse_composition(gets(p, "index", "")));
  } else {
    std::vector<Composition> all;
    for (int n = 2; n <= geti(p, "nmax", 4); ++n)
      for (auto& l : partitions_up_to(n, geti(p, "wmax", 7)))
        if (l[0] > 0) all.push_back(l);
    lambdas = sample(all, geti(p, "count", 12), rng);
  }
  Field gen = field_from(p, Field());
  Checks out;
  for (const auto& lam : lambdas) {
    int m = top_multiplicity(lam);
    VarSet vars = VarSet::xs(m);
    Composition tail(lam.begin() + m, lam.end());
    Side lhs = at(built(lam, Kind::MS, gen), vars, cat(xs_letters(m), reciprocal_letters(tail, gen)));
    out.push_back(compare(label_of(lam), lhs, plain(principal_product(lam, gen)), Mode::UpToScalar));
  }
  return out;
}

Checks fam_chain(const json& p, Rng&) {
  Composition lam = parse_composition(gets(p, "index", "[6,6,4,3,3,1,1,1,0]"));
  PrincipalChain ch = principal_chain(lam);
  Checks out;
  NamedCheck c = NamedCheck{"chain " + label_of(lam), proportional(ch.product, ch.expected, Mode::UpToScalar)};
  std::string trace;
  for (const auto& s : ch.steps) trace += (trace.empty() ? "" : " -> ") + s.rule + " " + label_of(s.index);
  c.report.note = trace;
  out.push_back(c);
  if (p.contains("expected")) {
    MPoly e = parse_poly(gets(p, "expected", ""), ch.product.vars(), Field());
    out.push_back(NamedCheck{"printed product", proportional(ch.product, e, Mode::UpToScalar)});
  }
  if (geti(p, "with_build", 0)) {
    int m = top_multiplicity(lam);
    VarSet vars = VarSet::xs(m);
    Composition tail(lam.begin() + m, lam.end());
    Side lhs = at(built(lam, Kind::MS, Field()), vars, cat(xs_letters(m), reciprocal_letters(tail, Field())));
    out.push_back(compare("built " + label_of(lam), lhs, plain(ch.product), Mode::UpToScalar));
  }
  return out;
}

// ---- staircases under admissible specializations

Checks fam_staircase_homogeneous(const json& p, Rng&) {
  int l = geti(p, "l", 2), k = geti(p, "k", 1), s = geti(p, "s", 2), beta = geti(p, "beta", 1);
  Composition lam = staircase(l, k, s, beta);
  Field f = admissible_field(p, l, s);
  Side ms = built(lam, Kind::MS, f);
  Side pp = built(lam, Kind::P, f);
  Checks out;
  out.push_back(homogeneity("MS" + label_of(lam) + " homogeneous", ms.poly));
  out.push_back(compare("MS" + label_of(lam) + " ~ P", ms, pp, Mode::UpToScalar));
  return out;
}

Checks fam_wheel(const json& p, Rng&) {
  int l = geti(p, "l", 2), s = geti(p, "s", 2);
  Composition lam = p.contains("index") ? parse_composition(gets(p, "index", ""))
                                        : staircase(l, geti(p, "k", 1), s, geti(p, "beta", 1));
  Field f = admissible_field(p, l, s);
  Kind kind = parse_kind(gets(p, "kind", "P"));
  Side sd = built(lam, kind, f);
  NamedCheck c{kind_str(kind) + label_of(lam) + " wheel", wheel_check(sd.poly, l, s, f.spec())};
  return {c};
}

Checks fam_first_fact_wheel(const json& p, Rng&) {
  int l = geti(p, "l", 2), k = geti(p, "k", 1), s = geti(p, "s", 2), beta = geti(p, "beta", 1);
  if (beta < 1) throw std::invalid_argument("beta must be positive");
  Field f = admissible_field(p, l, s);
  Composition lam = staircase(l, k, s, beta);
  Composition lower = staircase(l, k, s, beta - 1);
  int n = k + beta * l;
  VarSet vars = xy_vars(n, 0, 0);
  Side lhs = at(built(lam, Kind::MS, f), vars, cat(xs_letters(n), geometric(f.t(), l, n)));
  MPoly pre = resultant(xs_letters(n), geometric(f.q(), s, n, f.qt(0, l)), vars);
  Side rhs = mul(plain(pre), at(built(lower, Kind::MS, f), vars, xs_letters(n, 0, f.qt(-s, -l))));
  return {compare("MS" + label_of(lam), lhs, rhs, Mode::UpToScalar)};
}

Checks fam_fact_wheel(const json& p, Rng&) {
  int l = geti(p, "l", 2), k = geti(p, "k", 1), s = geti(p, "s", 2), beta = geti(p, "beta", 1);
  Field f = admissible_field(p, l, s);
  Composition lam = staircase(l, k, s, beta);
  VarSet vars = xy_vars(k, 0, beta);
  auto y = [&](int a) { return k + a; };
  std::vector<Letter> alpha = xs_letters(k);
  for (int a = 0; a <= beta; ++a) alpha = cat(alpha, geometric(f.t(), l, y(a)));
  Side lhs = at(built(lam, Kind::MS, f), vars, alpha);
  MPoly rhs = MPoly::constant(vars, Coef(1));
  for (int a = 0; a <= beta; ++a) {
    std::vector<Letter> X = xs_letters(k);
    for (int i = a + 1; i <= beta; ++i) X = cat(X, geometric(f.t(), l, y(i)));
    rhs = rhs * resultant(X, geometric(f.q(), s, y(a), f.qt(0, l)), vars);
  }
  return {compare("MS" + label_of(lam), lhs, plain(rhs), Mode::UpToScalar)};
}

// ---- quasistaircases

QSParams qs_params(const json& p) {
  return QSParams{geti(p, "l", 2), geti(p, "k", 1), geti(p, "s", 2), geti(p, "r", 0), geti(p, "beta", 1)};
}

Field qs_field(const json& p, const QSParams& q) {
  Field f = admissible_field(p, q.l, q.s);
  const SpecQT& sp = f.spec();
  if (q.r > 0 && (sp.e * q.r) % sp.m != 0)
    throw std::invalid_argument("omega must be an r-th root of unity for r=" + std::to_string(q.r) + " at " + sp.str());
  return f;
}

Checks fam_qs_homogeneous(const json& p, Rng&) {
  QSParams q = qs_params(p);
  Composition lam = quasistaircase(q);
  Field f = qs_field(p, q);
  Side ms = built(lam, Kind::MS, f);
  Side pp = built(lam, Kind::P, f);
  std::string tag = "MS" + label_of(lam) + " @ " + f.str();
  return {homogeneity(tag + " homogeneous", ms.poly), compare(tag + " ~ P", ms, pp, Mode::UpToScalar)};
}

Checks fam_last_fact(const json& p, Rng&) {
  QSParams q = qs_params(p);
  if (q.beta < 1) throw std::invalid_argument("beta must be positive");
  Composition lam = quasistaircase(q);
  Field f = qs_field(p, q);
  int n0 = q.r * (q.l + 1) / (q.s - 1) + q.l;
  // block length of the inner y letters on the right side; the printed form uses s
  int inner = gets(p, "inner", "l") == "s" ? q.s : q.l;
  int k = q.k, beta = q.beta, l = q.l;
  VarSet vars = xy_vars(k, 0, beta);
  auto y = [&](int a) { return k + a; };
  std::vector<Letter> low = xs_letters(k);
  for (int a = 0; a < beta; ++a) low = cat(low, geometric(f.t(), l, y(a)));
  Side lhs = at(built(lam, Kind::MS, f), vars, cat(low, geometric(f.t(), n0, y(beta))));
  MPoly rhs = resultant(low, geometric(f.q(), q.s + q.r, y(beta), f.qt(0, n0)), vars);
  for (int a = 0; a < beta; ++a) {
    std::vector<Letter> X = xs_letters(k);
    for (int i = a + 1; i < beta; ++i) X = cat(X, geometric(f.t(), inner, y(i)));
    rhs = rhs * resultant(X, geometric(f.q(), q.s, y(a), f.qt(0, l)), vars);
  }
  NamedCheck c = compare("MS" + label_of(lam) + " @ " + f.str(), lhs, plain(rhs), Mode::UpToScalar);
  return {c};
}

Checks fam_qs_reciprocal(const json& p, Rng&) {
  QSParams q = qs_params(p);
  Composition lam = quasistaircase(q);
  Field f = qs_field(p, q);
  auto sum = [&](const Composition& v) { return f.map(reciprocal_sum(v)); };
  Coef target = sum(lam);
  CheckReport uniq;
  uniq.pass = true;
  auto inside = partitions_inside(lam);
  for (const auto& mu : inside)
    if (mu != lam && sum(mu) == target) {
      uniq.pass = false;
      uniq.witnesses.push_back(label_of(mu));
    }
  uniq.note = std::to_string(inside.size()) + " partitions inside";
  CheckReport distinct;
  distinct.pass = true;
  auto pt = reciprocal_point(lam, f);
  for (std::size_t i = 0; i < pt.size(); ++i)
    for (std::size_t j = i + 1; j < pt.size(); ++j)
      if (pt[i] == pt[j]) {
        distinct.pass = false;
        distinct.witnesses.push_back(std::to_string(i + 1) + "," + std::to_string(j + 1));
      }
  std::string tag = label_of(lam) + " @ " + f.str();
  return {NamedCheck{tag + " unique sum", uniq}, NamedCheck{tag + " distinct entries", distinct}};
}

// ---- Jack clustering

Checks fam_jack_qs(const json& p, Rng&) {
  QSParams q = qs_params(p);
  if (q.beta < 1) throw std::invalid_argument("beta must be positive");
  AlphaParam alpha = clustering_alpha(q.l, q.s);
  Composition lam = quasistaircase(q);
  Composition lower = staircase(q.l, q.k, q.s, q.beta - 1);
  int n0 = q.r * (q.l + 1) / (q.s - 1) + q.l;
  int n = q.k + q.beta * q.l;
  VarSet vars = xy_vars(n, 0, 0);
  std::vector<Letter> ys(n0, Letter{Coef(1), n});
  Side lhs = at(plain(jack(lam, alpha)), vars, cat(xs_letters(n), ys));
  MPoly pre = MPoly::constant(vars, Coef(1));
  for (int i = 0; i < n; ++i) pre = pre * (MPoly::variable(vars, i) - MPoly::variable(vars, n)).pow(q.s + q.r);
  Side rhs = mul(plain(pre), at(plain(jack(lower, alpha)), vars, xs_letters(n)));
  return {compare("J" + label_of(lam) + " alpha=" + alpha.str(), lhs, rhs, Mode::UpToScalar)};
}

Checks fam_jack_last_fact(const json& p, Rng&) {
  QSParams q = qs_params(p);
  if (q.beta < 1) throw std::invalid_argument("beta must be positive");
  AlphaParam alpha = clustering_alpha(q.l, q.s);
  Composition lam = quasistaircase(q);
  int n0 = q.r * (q.l + 1) / (q.s - 1) + q.l;
  int k = q.k, beta = q.beta, l = q.l, s = q.s, r = q.r;
  VarSet vars = xy_vars(k, 0, beta);
  auto Y = [&](int a) { return MPoly::variable(vars, k + a); };
  auto X = [&](int i) { return MPoly::variable(vars, i); };
  std::vector<Letter> alpha_letters = xs_letters(k);
  for (int a = 0; a < beta; ++a) alpha_letters.insert(alpha_letters.end(), l, Letter{Coef(1), k + a});
  alpha_letters.insert(alpha_letters.end(), n0, Letter{Coef(1), k + beta});
  Side lhs = at(plain(jack(lam, alpha)), vars, alpha_letters);
  MPoly rhs = MPoly::constant(vars, Coef(1));
  for (int i = 0; i < k; ++i) rhs = rhs * (X(i) - Y(beta)).pow(r + s);
  for (int a = 0; a < beta; ++a) {
    rhs = rhs * (Y(a) - Y(beta)).pow((s + r) * l);
    for (int i = 0; i < k; ++i) rhs = rhs * (X(i) - Y(a)).pow(s);
    for (int i = a + 1; i < beta; ++i) rhs = rhs * (Y(i) - Y(a)).pow(l * s);
  }
  return {compare("J" + label_of(lam) + " alpha=" + alpha.str(), lhs, plain(rhs), Mode::UpToScalar)};
}

// ---- explicit recipes

Side recipe(const json& r, const VarSet& vars, const Field& f) {
  if (r.is_string()) return plain(parse_poly(r.get<std::string>(), vars, f));
  if (r.is_array()) {
    Side acc = plain(MPoly::constant(vars, Coef(1)));
    for (const auto& x : r) acc = mul(acc, recipe(x, vars, f));
    return acc;
  }
  if (!r.is_object()) throw std::invalid_argument("bad recipe: " + r.dump());
  if (r.contains("product")) return recipe(r.at("product"), vars, f);
  Side base;
  int n = 0;
  if (r.contains("build")) {
    const auto& b = r.at("build");
    Composition v = parse_composition(b.at("index").get<std::string>());
    n = static_cast<int>(v.size());
    std::string k = b.value("kind", "E");
    if (k == "J") {
      if (!b.contains("alpha")) throw std::invalid_argument("Jack recipe needs alpha");
      base = plain(jack(v, AlphaParam::parse(b.at("alpha").get<std::string>())));
    } else {
      base = built(v, parse_kind(k), f);
    }
  } else {
    throw std::invalid_argument("recipe needs build, product or an expression: " + r.dump());
  }
  EvalAlphabet a;
  if (r.contains("alphabet")) {
    a = parse_alphabet(r.at("alphabet").get<std::vector<std::string>>(), vars, f);
  } else {
    if (vars.size() < n) throw std::invalid_argument("not enough variables for " + r.dump());
    a.target = vars;
    a.letters = xs_letters(n);
  }
  if (static_cast<int>(a.letters.size()) != n)
    throw std::invalid_argument("alphabet has " + std::to_string(a.letters.size()) + " letters, index needs " +
                                std::to_string(n));
  Side out{substitute(base.poly, a), base.scale};
  if (r.contains("times")) out = mul(out, recipe(r.at("times"), vars, f));
  return out;
}

Checks fam_explicit(const json& p, Rng&) {
  Field f = field_from(p, Field());
  VarSet vars(p.at("vars").get<std::vector<std::string>>());
  Side lhs = recipe(p.at("lhs"), vars, f);
  Side rhs = recipe(p.at("rhs"), vars, f);
  NamedCheck c = compare(gets(p, "label", "lhs ~ rhs"), lhs, rhs, parse_mode(gets(p, "mode", "UpToScalar")));
  return {c};
}

using FamilyFn = Checks (*)(const json&, Rng&);

const std::map<std::string, FamilyFn>& families() {
  static const std::map<std::string, FamilyFn> m{
      {"saturate", fam_saturate},
      {"standard-spec", fam_standard},
      {"principal-evaluation", fam_principal},
      {"principal-chain", fam_chain},
      {"staircase-homogeneous", fam_staircase_homogeneous},
      {"wheel", fam_wheel},
      {"first-fact-wheel", fam_first_fact_wheel},
      {"fact-wheel", fam_fact_wheel},
      {"qs-homogeneous", fam_qs_homogeneous},
      {"qs-reciprocal", fam_qs_reciprocal},
      {"last-fact", fam_last_fact},
      {"jack-qs", fam_jack_qs},
      {"jack-last-fact", fam_jack_last_fact},
      {"explicit", fam_explicit},
  };
  return m;
}

}  // namespace

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : families()) out.push_back(k);
  return out;
}

json CaseReport::to_json() const {
  json j;
  j["name"] = name;
  j["verdict"] = !error.empty() ? "error" : pass ? "pass" : "fail";
  j["scalar"] = nullptr;
  if (!checks.empty() && checks.front().report.scalar) j["scalar"] = checks.front().report.scalar->str();
  j["millis"] = static_cast<long long>(millis + 0.5);
  if (!error.empty()) j["error"] = error;
  j["checks"] = json::array();
  for (const auto& c : checks) {
    json x{{"label", c.label}, {"holds", c.report.pass}};
    if (!c.expect_pass) x["expected"] = "fail";
    if (c.report.scalar) x["scalar"] = c.report.scalar->str();
    if (!c.report.witnesses.empty()) x["witnesses"] = c.report.witnesses;
    if (!c.report.note.empty()) x["note"] = c.report.note;
    j["checks"].push_back(x);
  }
  return j;
}

std::vector<IdentityCase> parse_corpus(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("corpus must be a JSON list");
  std::vector<IdentityCase> out;
  std::set<std::string> seen;
  for (const auto& e : j) {
    IdentityCase c;
    c.name = e.at("name").get<std::string>();
    c.family = e.at("family").get<std::string>();
    c.description = e.value("description", "");
    c.slow = e.value("slow", false);
    c.data = e;
    if (!families().count(c.family)) throw std::invalid_argument("case " + c.name + ": unknown family " + c.family);
    if (!seen.insert(c.name).second) throw std::invalid_argument("duplicate case name " + c.name);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<IdentityCase> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("corpus " + path + ": " + e.what());
  }
  return parse_corpus(j);
}

std::string default_corpus_path() { return std::string(MACFACT_CORPUS_DIR) + "/identities.json"; }

json parse_params(std::string_view text) {
  json out = json::object();
  std::string s(text);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos;
    for (int depth = 0; end < s.size() && (depth > 0 || s[end] != ','); ++end) {
      if (s[end] == '[' || s[end] == '(') ++depth;
      if (s[end] == ']' || s[end] == ')') --depth;
    }
    std::string item = s.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("malformed parameter: " + item);
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      int v = std::stoi(val, &used);
      if (used == val.size()) {
        out[key] = v;
        continue;
      }
    } catch (const std::exception&) {
    }
    out[key] = val;
  }
  return out;
}

CaseReport run_case(const IdentityCase& c, const json& overrides, std::uint64_t seed) {
  CaseReport rep;
  rep.name = c.name;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<json> runs;
  json base = c.data.contains("params") ? c.data.at("params") : json::object();
  for (auto it = c.data.begin(); it != c.data.end(); ++it)
    if (it.key() != "params" && it.key() != "grid" && it.key() != "name" && it.key() != "family" &&
        it.key() != "description" && it.key() != "slow" && !base.contains(it.key()))
      base[it.key()] = it.value();
  if (overrides.is_object() && !overrides.empty()) {
    json p = base;
    for (auto it = overrides.begin(); it != overrides.end(); ++it) p[it.key()] = it.value();
    runs.push_back(p);
  } else {
    runs.push_back(base);
    if (c.data.contains("grid"))
      for (const auto& g : c.data.at("grid")) {
        json p = base;
        for (auto it = g.begin(); it != g.end(); ++it) p[it.key()] = it.value();
        runs.push_back(p);
      }
  }
  FamilyFn fn = families().at(c.family);
  Rng rng(seed);
  try {
    rep.pass = true;
    for (const auto& p : runs) {
      Checks ch = fn(p, rng);
      if (ch.empty()) throw std::logic_error("no checks produced");
      bool holds = std::all_of(ch.begin(), ch.end(), [](const NamedCheck& k) { return k.report.pass; });
      bool expect = gets(p, "expect", "pass") != "fail";
      for (auto& k : ch) k.expect_pass = expect;
      rep.pass = rep.pass && holds == expect;
      rep.checks.insert(rep.checks.end(), ch.begin(), ch.end());
    }
  } catch (const std::exception& e) {
    rep.pass = false;
    rep.error = "case " + c.name + ": " + e.what();
  }
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace macfact
