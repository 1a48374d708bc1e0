#include "macfact/macdonald.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "macfact/hecke.hpp"

namespace macfact {

Kind parse_kind(std::string_view s) {
  if (s == "E") return Kind::E;
  if (s == "M") return Kind::M;
  if (s == "P") return Kind::P;
  if (s == "MS") return Kind::MS;
  throw std::invalid_argument("unknown kind: " + std::string(s));
}

std::string kind_str(Kind k) {
  switch (k) {
    case Kind::E: return "E";
    case Kind::M: return "M";
    case Kind::P: return "P";
    case Kind::MS: return "MS";
  }
  return "?";
}

bool is_symmetric_kind(Kind k) { return k == Kind::P || k == Kind::MS; }
bool is_shifted_kind(Kind k) { return k == Kind::M || k == Kind::MS; }

// ---------------------------------------------------------------- content

namespace {

Coef normalize_factor(const Coef& c) {
  if (c.is_zero() || c.is_constant()) return Coef(1);
  Coef r = c.ring() == 0 ? c.shifted(-c.min_e1(), -c.min_e2()) : c.shifted(-c.min_e1(), 0);
  return r.primitive();
}

// 1 - q^A t^B split into irreducibles (generic) or as one factor (specialized).
std::vector<Coef> edge_factors(int A, int B, const Field& field) {
  std::vector<Coef> out;
  if (!field.is_generic()) {
    Coef c = normalize_factor(field.map(Coef(1) - Coef::monomial(0, A, B)));
    if (!c.is_constant()) out.push_back(c);
    return out;
  }
  int d = std::gcd(std::abs(A), std::abs(B));
  if (d == 0) return out;
  int a = A / d, b = B / d;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    const auto& phi = cyclotomic_poly(e);
    std::vector<Term2> ts;
    for (std::size_t j = 0; j < phi.size(); ++j)
      if (!phi[j].is_zero()) ts.push_back(Term2{static_cast<int>(j) * a, static_cast<int>(j) * b, phi[j]});
    out.push_back(normalize_factor(Coef::from_terms(0, std::move(ts))));
  }
  return out;
}

// Phi_e(t) with multiplicity floor(n/e), mapped into the field.
std::vector<Coef> poincare_factors(int n, const Field& field) {
  std::vector<Coef> out;
  for (int e = 1; e <= n; ++e) {
    const auto& phi = cyclotomic_poly(e);
    std::vector<Term2> ts;
    for (std::size_t j = 0; j < phi.size(); ++j)
      if (!phi[j].is_zero()) ts.push_back(Term2{0, static_cast<int>(j), phi[j]});
    Coef f = normalize_factor(field.map(Coef::from_terms(0, std::move(ts))));
    if (f.is_constant()) continue;
    for (int k = 0; k < n / e; ++k) out.push_back(f);
  }
  return out;
}

void rational_and_monomial_content(MPoly& f, bool keep_e1 = false) {
  if (f.is_zero()) return;
  mpz_class g = 0, l = 1;
  bool first = true;
  int m1 = 0, m2 = 0;
  int ring = f.ring();
  for (const auto& [e, c] : f.terms()) {
    for (const auto& t : c.terms()) {
      if (first) {
        m1 = t.e1;
        m2 = t.e2;
        first = false;
      }
      m1 = std::min(m1, t.e1);
      m2 = std::min(m2, t.e2);
      if (g != 1) g = gcd(g, t.c.numerator());
      if (!t.c.is_integer()) {
        mpz_class d = t.c.denominator();
        l = l / gcd(l, d) * d;
      }
    }
  }
  if (ring != 0) m2 = 0;
  if (keep_e1) m1 = 0;
  Rational factor(mpq_class(l, g));
  bool scale = !factor.is_one();
  for (auto& [e, c] : f.mutable_terms()) {
    if (scale) c = c.scaled(factor);
    if (m1 || m2) c.shift_inplace(-m1, -m2);
  }
}

// Index of the coefficient with the fewest terms.
std::size_t smallest(const MPoly& f) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f.terms()[i].second.size() < f.terms()[best].second.size()) best = i;
  return best;
}

// Divides every coefficient by g; on failure leaves f untouched and reports the offender.
bool divide_all(MPoly& f, const Coef& g, std::size_t first, std::size_t* failed) {
  std::vector<Coef> q(f.size());
  auto attempt = [&](std::size_t i) {
    auto r = f.terms()[i].second.divide_exact(g);
    if (!r) {
      if (failed) *failed = i;
      return false;
    }
    q[i] = std::move(*r);
    return true;
  };
  if (!attempt(first)) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (i != first && !attempt(i)) return false;
  auto& ts = f.mutable_terms();
  for (std::size_t i = 0; i < ts.size(); ++i) ts[i].second = std::move(q[i]);
  return true;
}

// Removes gcd(p, content) from f, refining the gcd on failed divisions; returns what is left of p.
Coef strip_factor(MPoly& f, Coef p) {
  std::size_t s = smallest(f);
  Coef g = gcd(p, f.terms()[s].second);
  while (!g.is_constant()) {
    std::size_t bad = 0;
    if (divide_all(f, g, s, &bad)) {
      p = normalize_factor(*p.divide_exact(g));
      if (p.is_constant()) break;
      s = smallest(f);
      g = gcd(p, f.terms()[s].second);
    } else {
      g = gcd(g, f.terms()[bad].second);
    }
  }
  return p;
}

// Layers of an eps-series coefficient as Laurent polynomials in u.
std::vector<Coef> eps_layers(const Coef& c, int order) {
  std::vector<std::vector<Term2>> ts(order);
  for (const auto& t : c.terms())
    if (t.e1 < order) ts[t.e1].push_back(Term2{t.e2, 0, t.c});
  std::vector<Coef> out;
  for (auto& x : ts) out.push_back(Coef::from_terms(1, std::move(x)));
  return out;
}

// f / d modulo eps^order, when d has a nonzero eps-free part and the quotient is polynomial.
std::optional<Coef> divide_series(const Coef& f, const std::vector<Coef>& d, int order) {
  std::vector<Coef> fl = eps_layers(f, order);
  std::vector<Coef> g(order);
  std::vector<Term2> out;
  for (int k = 0; k < order; ++k) {
    Coef r = fl[k];
    for (int i = 1; i <= k; ++i)
      if (!d[i].is_zero() && !g[k - i].is_zero()) r -= d[i] * g[k - i];
    if (r.is_zero()) continue;
    auto q = r.divide_exact(d[0]);
    if (!q) return std::nullopt;
    g[k] = std::move(*q);
    for (const auto& t : g[k].terms()) out.push_back(Term2{k, t.e1, t.c});
  }
  return Coef::from_terms(0, std::move(out));
}

// Divides every coefficient by d (all or nothing).
bool divide_all_series(MPoly& f, const Coef& d, int order) {
  std::vector<Coef> dl = eps_layers(d, order);
  if (dl[0].is_zero()) return false;
  std::vector<Coef> q(f.size());
  std::size_t s = smallest(f);
  for (std::size_t k = 0; k <= f.size(); ++k) {
    std::size_t i = k == 0 ? s : k - 1;
    if (k > 0 && i == s) continue;
    auto r = divide_series(f.terms()[i].second, dl, order);
    if (!r) return false;
    q[i] = std::move(*r);
  }
  auto& ts = f.mutable_terms();
  for (std::size_t i = 0; i < ts.size(); ++i) ts[i].second = std::move(q[i]);
  return true;
}

// Truncated eps-series coefficients: no content may be divided out in eps.
// A common eps power is divided out and the order lowered to match.
void tidy_perturbed(MPoly& f, Field& field, std::vector<Coef>& pending) {
  std::vector<MPoly::Term> ts;
  ts.reserve(f.size());
  for (auto& [e, c] : f.mutable_terms()) {
    Coef d = field.truncate(c);
    if (!d.is_zero()) ts.emplace_back(e, std::move(d));
  }
  f = MPoly::from_terms(f.vars(), std::move(ts));
  rational_and_monomial_content(f, true);
  if (f.is_zero()) return;
  int m = field.order();
  for (const auto& [e, c] : f.terms()) m = std::min(m, c.min_e1());
  if (m > 0) {
    for (auto& t : f.mutable_terms()) t.second.shift_inplace(-m, 0);
    field = Field::perturbed(field.spec(), field.order() - m);
  }
  std::vector<Coef> left;
  for (auto& d : pending)
    if (!divide_all_series(f, d, field.order())) left.push_back(std::move(d));
  pending = std::move(left);
  rational_and_monomial_content(f, true);
}

}  // namespace

std::vector<Coef> remove_content(MPoly& f, std::vector<Coef> candidates) {
  rational_and_monomial_content(f);
  if (f.is_zero()) return {};
  std::vector<Coef> left;
  bool generic = f.ring() == 0;
  for (Coef& p : candidates) {
    if (p.is_constant()) continue;
    if (generic) {
      if (!divide_all(f, p, smallest(f), nullptr)) left.push_back(p);
      continue;
    }
    Coef rest = strip_factor(f, p);
    if (!rest.is_constant()) left.push_back(rest);
  }
  rational_and_monomial_content(f);
  return left;
}

void remove_content_exhaustively(MPoly& f, std::vector<Coef> candidates) {
  std::sort(candidates.begin(), candidates.end(), [](const Coef& a, const Coef& b) { return a.str() < b.str(); });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& c : candidates)
    while (!f.is_zero() && !c.is_constant() && remove_content(f, {c}).empty()) {
    }
}

void remove_full_content(MPoly& f) {
  rational_and_monomial_content(f);
  if (f.is_zero() || f.ring() == 0) return;
  strip_factor(f, normalize_factor(f.terms()[smallest(f)].second));
  rational_and_monomial_content(f);
}

// ---------------------------------------------------------------- builders

BuildReport build_nonsymmetric(const Composition& v, Kind kind, const Field& field, PathRule rule) {
  return build_along_path(v, kind, field, yb_path(v, rule));
}

bool edge_singular(const Composition& w, int i, const Field& field) {
  std::vector<int> st = standardization(w);
  int A = w[i] - w[i - 1];
  int B = st[i] - st[i - 1];
  return field.map(Coef(1) - Coef::monomial(0, A, B)).is_zero();
}

BuildReport build_along_path(const Composition& v, Kind kind, const Field& field_in, const std::vector<YBStep>& path) {
  Field field = field_in;
  if (is_symmetric_kind(kind)) throw std::invalid_argument("nonsymmetric builder needs kind E or M");
  int n = static_cast<int>(v.size());
  if (n < 1) throw std::invalid_argument("empty index");
  VarSet vars = VarSet::xs(n);
  BuildReport rep;
  rep.index = v;
  rep.kind = kind;
  rep.field = field;
  rep.path = path;
  if (replay_path(n, path) != v) throw std::invalid_argument("path does not reach the index");
  MPoly f = MPoly::constant(vars, Coef(1));
  Composition w(n, 0);
  Coef one_minus_t = field.map(Coef(1) - Coef::monomial(0, 0, 1));
  Exp xn{};
  xn[n - 1] = 1;
  std::vector<Coef> pending;
  for (const auto& step : rep.path) {
    if (step.kind == YBStep::AffinePhi) {
      f = apply_affine(f, field);
      if (kind == Kind::E) {
        f = f.shifted(xn);
      } else {
        f = f.shifted(xn) - f;
      }
      Composition p(n);
      for (int k = 0; k + 1 < n; ++k) p[k] = w[k + 1];
      p[n - 1] = w[0] + 1;
      w = p;
      if (field.is_perturbed())
        tidy_perturbed(f, field, pending);
      else
        pending = remove_content(f, std::move(pending));
      continue;
    }
    int i = step.i;
    std::vector<int> st = standardization(w);
    int A = w[i] - w[i - 1];
    int B = st[i] - st[i - 1];
    Coef denom = field.map(Coef(1) - Coef::monomial(0, A, B));
    if (denom.is_zero())
      throw SingularEdgeError("YB edge singular: " + composition_str(w) + " --s" + std::to_string(i) + "--> (1 - q^" +
                              std::to_string(A) + "*t^" + std::to_string(B) + " vanishes)");
    MPoly g = apply_hecke(f, i, false, field).scaled(denom);
    g += f.scaled(one_minus_t);
    f = std::move(g);
    std::swap(w[i - 1], w[i]);
    if (field.is_perturbed()) {
      // factors vanishing at eps = 0 carry the pole and stay
      for (auto& c : edge_factors(A, B, Field()))
        if (!field.base().map(c).is_zero()) pending.push_back(field.map(c));
      tidy_perturbed(f, field, pending);
      continue;
    }
    for (auto& c : edge_factors(A, B, field)) {
      pending.push_back(c);
      rep.hints.push_back(c);
    }
    pending = remove_content(f, std::move(pending));
  }
  rep.poly = std::move(f);
  rep.scale = rep.poly.coefficient(make_exp(v));
  if (field.is_perturbed()) {
    rep.field = field;
    return rep;
  }
  remove_full_content(rep.poly);
  rep.scale = rep.poly.coefficient(make_exp(v));
  if (rep.scale.is_zero()) throw std::logic_error("leading coefficient vanished in " + composition_str(v));
  return rep;
}

BuildReport specialize_build(const BuildReport& generic, const Field& field) {
  if (!generic.field.is_generic()) throw std::invalid_argument("specialize_build expects a generic build");
  BuildReport rep = generic;
  rep.field = field;
  rep.route = "generic-specialized";
  if (field.is_generic()) return rep;
  Coef sc = field.map(generic.scale);
  std::vector<Coef> hints;
  for (const auto& h : generic.hints) {
    Coef m = normalize_factor(field.map(h));
    if (!m.is_constant()) hints.push_back(m);
  }
  if (!sc.is_zero()) {
    std::vector<MPoly::Term> ts;
    for (const auto& [e, c] : generic.poly.terms()) {
      Coef m = field.map(c);
      if (!m.is_zero()) ts.emplace_back(e, std::move(m));
    }
    rep.poly = MPoly::from_terms(generic.poly.vars(), std::move(ts));
  } else {
    FracPoly fp;
    fp.vars = generic.poly.vars();
    for (const auto& [e, c] : generic.poly.terms()) {
      Frac x = specialize(Frac(c, generic.scale), field);
      if (!x.is_zero()) fp.terms.emplace_back(e, x);
    }
    rep.poly = clear_denominators(fp).first;
  }
  remove_content(rep.poly, hints);
  remove_full_content(rep.poly);
  rep.scale = rep.poly.coefficient(make_exp(rep.index));
  if (rep.scale.is_zero()) throw std::domain_error("specialization pole");
  return rep;
}

namespace {

int singular_edges_on(const std::vector<YBStep>& path, int n, const Field& field) {
  Composition w(n, 0);
  int count = 0;
  for (const auto& s : path) {
    if (s.kind == YBStep::AffinePhi) {
      Composition p(n);
      for (int k = 0; k + 1 < n; ++k) p[k] = w[k + 1];
      p[n - 1] = w[0] + 1;
      w = p;
    } else {
      if (edge_singular(w, s.i, field)) ++count;
      std::swap(w[s.i - 1], w[s.i]);
    }
  }
  return count;
}

// Lowest eps-order part of a perturbed build, or nullopt if nothing survives the truncation.
std::optional<BuildReport> lowest_order(const BuildReport& pb, const Field& field) {
  if (pb.poly.is_zero()) return std::nullopt;
  int j = pb.poly.terms().front().second.min_e1();
  for (const auto& [e, c] : pb.poly.terms()) j = std::min(j, c.min_e1());
  Coef lead = pb.poly.coefficient(make_exp(pb.index));
  if (lead.is_zero() || lead.min_e1() != j) throw std::domain_error("specialization pole");
  BuildReport rep = pb;
  rep.field = field;
  rep.route = "perturbed";
  rep.hints.clear();
  std::vector<MPoly::Term> ts;
  for (const auto& [e, c] : pb.poly.terms()) {
    std::vector<Term2> low;
    for (const auto& t : c.terms())
      if (t.e1 == j) low.push_back(Term2{t.e2, 0, t.c});
    if (!low.empty()) ts.emplace_back(e, Coef::from_terms(field.ring(), std::move(low)));
  }
  rep.poly = MPoly::from_terms(pb.poly.vars(), std::move(ts));
  remove_full_content(rep.poly);
  rep.scale = rep.poly.coefficient(make_exp(rep.index));
  return rep;
}

BuildReport symmetrize_report(const BuildReport& nb, const Composition& lambda, Kind kind, const Field& field);

}  // namespace

BuildReport perturbed_build(const Composition& v, Kind kind, const Field& field) {
  if (field.is_generic() || field.is_perturbed()) throw std::invalid_argument("perturbed build needs a specialization");
  int n = static_cast<int>(v.size());
  bool sym = is_symmetric_kind(kind);
  Kind nk = kind == Kind::P ? Kind::E : kind == Kind::MS ? Kind::M : kind;
  std::vector<YBStep> path = yb_path(v);
  int order = singular_edges_on(path, n, field) + 1;
  for (; order <= 64; order *= 2) {
    Field pf = Field::perturbed(field.spec(), order);
    BuildReport pb = build_along_path(v, nk, pf, path);
    if (sym) {
      BuildReport sb = pb;
      sb.kind = kind;
      sb.poly = symmetrize(pb.poly, pb.field);
      pb = std::move(sb);
    }
    auto rep = lowest_order(pb, field);
    if (rep) return *rep;
  }
  throw std::domain_error("specialization pole");
}

namespace {

std::optional<std::vector<YBStep>> usable_path(const Composition& v, const Field& field) {
  auto blocked = [&](const Composition& w, int i) { return edge_singular(w, i, field); };
  std::vector<YBStep> p = yb_path(v);
  Composition w(v.size(), 0);
  bool ok = true;
  for (const auto& s : p) {
    if (s.kind == YBStep::Transposition && blocked(w, s.i)) {
      ok = false;
      break;
    }
    if (s.kind == YBStep::AffinePhi) {
      Composition q(w.size());
      for (std::size_t k = 0; k + 1 < w.size(); ++k) q[k] = w[k + 1];
      q[w.size() - 1] = w[0] + 1;
      w = q;
    } else {
      std::swap(w[s.i - 1], w[s.i]);
    }
  }
  if (ok) return p;
  return yb_path_avoiding(v, blocked);
}

/// Distinct rearrangements of lambda: lambda itself, then the rest in lexicographic order.
std::vector<Composition> rearrangements(const Composition& lambda) {
  std::vector<Composition> out{lambda};
  Composition w = lambda;
  std::sort(w.begin(), w.end());
  do {
    if (w != lambda) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

BuildReport symmetrize_report(const BuildReport& nb, const Composition& lambda, Kind kind, const Field& field) {
  int n = static_cast<int>(lambda.size());
  BuildReport rep;
  rep.index = lambda;
  rep.kind = kind;
  rep.field = field;
  rep.path = nb.path;
  rep.route = nb.route;
  MPoly g = symmetrize(nb.poly, field);
  std::vector<Coef> cands = nb.hints;
  for (auto& c : poincare_factors(n, field)) cands.push_back(c);
  int top = lambda.empty() ? 0 : lambda[0];
  for (int a = 1; a <= top; ++a)
    for (int b = 0; b <= n; ++b)
      for (auto& c : edge_factors(a, b, field)) cands.push_back(c);
  remove_content_exhaustively(g, std::move(cands));
  remove_full_content(g);
  rep.poly = std::move(g);
  rep.scale = rep.poly.coefficient(make_exp(lambda));
  return rep;
}

}  // namespace

BuildReport build_symmetric(const Composition& lambda, Kind kind, const Field& field) {
  if (!is_symmetric_kind(kind)) throw std::invalid_argument("symmetric builder needs kind P or MS");
  if (!is_partition(lambda)) throw std::invalid_argument("symmetric kinds need a partition index");
  int n = static_cast<int>(lambda.size());
  if (n > kMaxVars) throw std::invalid_argument("arity overflow");
  Kind nk = kind == Kind::P ? Kind::E : Kind::M;
  if (field.is_generic()) {
    BuildReport rep = symmetrize_report(*build(lambda, nk, field), lambda, kind, field);
    if (rep.scale.is_zero()) throw std::logic_error("symmetrization lost the leading term");
    return rep;
  }
  // Any rearrangement v of lambda symmetrizes to a multiple of the same polynomial; use the
  // first one reachable without singular edges whose multiple survives.
  for (const auto& v : rearrangements(lambda)) {
    auto path = usable_path(v, field);
    if (!path) continue;
    BuildReport nb = build_along_path(v, nk, field, *path);
    BuildReport rep = symmetrize_report(nb, lambda, kind, field);
    if (rep.scale.is_zero()) continue;
    rep.route = v == lambda ? (nb.path == yb_path(v) ? "direct" : "alternate-path") : "rearranged " + composition_str(v);
    return rep;
  }
  if (field.ring() <= 2) return perturbed_build(lambda, kind, field);
  auto gen = build(lambda, kind, Field());
  return specialize_build(*gen, field);
}

// ---------------------------------------------------------------- cache

namespace {

std::mutex g_cache_mutex;
std::map<std::string, std::shared_ptr<const BuildReport>>& cache() {
  static std::map<std::string, std::shared_ptr<const BuildReport>> c;
  return c;
}

std::string cache_key(const Composition& v, Kind kind, const Field& field) {
  return kind_str(kind) + composition_str(v) + "|" + field.str();
}

}  // namespace

std::shared_ptr<const BuildReport> build(const Composition& v, Kind kind, const Field& field) {
  std::string key = cache_key(v, kind, field);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  std::shared_ptr<const BuildReport> rep;
  if (is_symmetric_kind(kind)) {
    rep = std::make_shared<const BuildReport>(build_symmetric(v, kind, field));
  } else {
    try {
      rep = std::make_shared<const BuildReport>(build_nonsymmetric(v, kind, field));
    } catch (const SingularEdgeError&) {
      if (field.is_generic()) throw;
      auto path = yb_path_avoiding(v, [&](const Composition& w, int i) { return edge_singular(w, i, field); });
      if (path) {
        BuildReport r = build_along_path(v, kind, field, *path);
        r.route = "alternate-path";
        rep = std::make_shared<const BuildReport>(std::move(r));
      } else if (field.ring() <= 2) {
        rep = std::make_shared<const BuildReport>(perturbed_build(v, kind, field));
      } else {
        auto gen = build(v, kind, Field());
        rep = std::make_shared<const BuildReport>(specialize_build(*gen, field));
      }
    }
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return cache().emplace(key, rep).first->second;
}

void clear_cache() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  cache().clear();
}

std::size_t cache_size() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return cache().size();
}

// ---------------------------------------------------------------- checks

VanishingReport vanishing_check(const Composition& target, Kind kind, const Field& field, int budget) {
  if (!is_shifted_kind(kind)) throw std::invalid_argument("vanishing applies to M and MS");
  int n = static_cast<int>(target.size());
  int w = weight(target);
  std::vector<Composition> pts =
      kind == Kind::M ? compositions_up_to(n, w) : partitions_up_to(n, w);
  if (static_cast<int>(pts.size()) > budget) throw std::length_error("enumeration budget exceeded");
  auto rep = build(target, kind, field);
  VanishingReport out;
  for (const auto& u : pts) {
    Coef val = evaluate(rep->poly, reciprocal_point(u, field));
    if (u == target) {
      out.nonzero_at_index = !val.is_zero();
      continue;
    }
    out.points.push_back(u);
    if (!val.is_zero()) out.violations.push_back(u);
  }
  return out;
}

bool SpectralReport::pass() const {
  if (eigenvalues.size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (!eigenvalues[i] || !(*eigenvalues[i] == expected[i])) return false;
  return true;
}

SpectralReport spectral_check(const Composition& v, Kind kind, const Field& field) {
  if (kind != Kind::E && kind != Kind::M) throw std::invalid_argument("spectral check applies to E and M");
  auto rep = build(v, kind, field);
  const MPoly& f = rep->poly;
  int n = static_cast<int>(v.size());
  std::vector<QMono> rv = reciprocal(v);
  SpectralReport out;
  const auto& [lead_e, lead_c] = f.leading();
  for (int i = 1; i <= n; ++i) {
    out.expected.emplace_back(field.qt(-rv[i - 1].qexp, -rv[i - 1].texp));
    MPoly g = kind == Kind::E ? apply_cherednik(f, i, field) : apply_knop(f, i, field);
    Coef gl = g.coefficient(lead_e);
    if (!gl.is_zero() && g.scaled(lead_c) == f.scaled(gl)) {
      out.eigenvalues.emplace_back(Frac(gl, lead_c));
    } else {
      out.eigenvalues.emplace_back(std::nullopt);
    }
  }
  return out;
}

}  // namespace macfact
