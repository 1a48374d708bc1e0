#include "macfact/mpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace macfact {

// ---------------------------------------------------------------- VarSet

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > kMaxVars)
    throw std::invalid_argument("arity overflow: at most " + std::to_string(kMaxVars) + " variables");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("duplicate variable name");
}

VarSet VarSet::xs(int n) {
  if (n < 0 || n > kMaxVars) throw std::invalid_argument("arity overflow: at most " + std::to_string(kMaxVars) + " variables");
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return VarSet(std::move(v));
}

int VarSet::index(std::string_view n) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == n) return i;
  return -1;
}

// ---------------------------------------------------------------- exponents

Exp zero_exp() {
  Exp e{};
  return e;
}

Exp make_exp(const std::vector<int>& v) {
  if (static_cast<int>(v.size()) > kMaxVars) throw std::invalid_argument("arity overflow");
  Exp e{};
  for (std::size_t i = 0; i < v.size(); ++i) e[i] = static_cast<std::int16_t>(v[i]);
  return e;
}

std::vector<int> exp_vector(const Exp& e, int n) { return std::vector<int>(e.begin(), e.begin() + n); }

int total_degree(const Exp& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

// ---------------------------------------------------------------- MPoly

MPoly MPoly::constant(VarSet vars, const Coef& c) {
  MPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace_back(zero_exp(), c);
  return p;
}

MPoly MPoly::variable(VarSet vars, int i, const Coef& c) {
  Exp e{};
  e.at(i) = 1;
  return monomial(std::move(vars), e, c);
}

MPoly MPoly::monomial(VarSet vars, const Exp& e, const Coef& c) {
  MPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace_back(e, c);
  return p;
}

MPoly MPoly::from_terms(VarSet vars, std::vector<Term> terms) {
  MPoly p(std::move(vars));
  auto less = [](const Term& a, const Term& b) { return a.first < b.first; };
  if (!std::is_sorted(terms.begin(), terms.end(), less)) std::stable_sort(terms.begin(), terms.end(), less);
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms.size();) {
    std::size_t s = r + 1;
    Coef acc = std::move(terms[r].second);
    while (s < terms.size() && terms[s].first == terms[r].first) {
      acc += terms[s].second;
      ++s;
    }
    if (!acc.is_zero()) {
      terms[w].first = terms[r].first;
      terms[w].second = std::move(acc);
      ++w;
    }
    r = s;
  }
  terms.resize(w);
  p.terms_ = std::move(terms);
  return p;
}

Coef MPoly::coefficient(const Exp& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const Exp& x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Coef();
}

int MPoly::ring() const {
  for (const auto& t : terms_)
    if (!t.second.is_constant()) return t.second.ring();
  return 0;
}

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

void check_vars(const MPoly& a, const MPoly& b) {
  if (!(a.vars() == b.vars())) throw std::invalid_argument("mismatched variable sets");
}

std::vector<MPoly::Term> merge(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b, bool neg) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, neg ? -b[j].second : b[j].second);
      ++j;
    } else {
      Coef s = a[i].second;
      s.add_shifted(b[j].second, 0, 0, neg);
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    vars_ = o.vars_;
    terms_ = o.terms_;
    return *this;
  }
  check_vars(*this, o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    vars_ = o.vars_;
    *this = -o;
    return *this;
  }
  check_vars(*this, o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  check_vars(a, b);
  if (a.terms_.empty() || b.terms_.empty()) return MPoly(a.vars_);
  std::vector<MPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Exp e;
      for (int k = 0; k < kMaxVars; ++k) e[k] = static_cast<std::int16_t>(x.first[k] + y.first[k]);
      prod.emplace_back(e, x.second * y.second);
    }
  }
  return MPoly::from_terms(a.vars_, std::move(prod));
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second)) return false;
  return true;
}

MPoly MPoly::scaled(const Coef& c) const {
  if (c.is_zero()) return MPoly(vars_);
  MPoly r(*this);
  if (c.is_one()) return r;
  for (auto& t : r.terms_) t.second = t.second * c;
  return r;
}

MPoly MPoly::shifted(const Exp& e) const {
  MPoly r(*this);
  for (auto& t : r.terms_)
    for (int k = 0; k < kMaxVars; ++k) t.first[k] = static_cast<std::int16_t>(t.first[k] + e[k]);
  return r;
}

MPoly MPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  MPoly r = constant(vars_, Coef(1));
  MPoly b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

std::optional<int> MPoly::homogeneous_degree() const {
  if (terms_.empty()) throw std::domain_error("undefined degree");
  int d = total_degree(terms_.front().first);
  for (const auto& t : terms_)
    if (total_degree(t.first) != d) return std::nullopt;
  return d;
}

MPoly MPoly::degree_part(int d) const {
  MPoly r(vars_);
  for (const auto& t : terms_)
    if (total_degree(t.first) == d) r.terms_.push_back(t);
  return r;
}

int MPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("undefined degree");
  int d = total_degree(terms_.front().first);
  for (const auto& t : terms_) d = std::max(d, total_degree(t.first));
  return d;
}

MPoly MPoly::permuted(const std::vector<int>& perm) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exp e{};
    for (int i = 0; i < nvars(); ++i) e[perm[i]] = t.first[i];
    ts.emplace_back(e, t.second);
  }
  return from_terms(vars_, std::move(ts));
}

bool MPoly::is_symmetric() const {
  int n = nvars();
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[i + 1]);
    if (!(permuted(perm) == *this)) return false;
  }
  return true;
}

namespace {

std::string mono_text(const VarSet& vars, const Exp& e) {
  std::string out;
  for (int i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string mono_latex(const VarSet& vars, const Exp& e) {
  std::string out;
  for (int i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    const std::string& n = vars.name(i);
    std::string base = n;
    std::size_t k = 0;
    while (k < n.size() && std::isalpha(static_cast<unsigned char>(n[k]))) ++k;
    if (k > 0 && k < n.size()) base = n.substr(0, k) + "_{" + n.substr(k) + "}";
    out += base;
    if (e[i] != 1) out += "^{" + std::to_string(e[i]) + "}";
  }
  return out;
}

// Joins "coefficient * monomial" pieces with signs.
std::string join_terms(const std::vector<std::pair<std::string, std::string>>& pieces, bool latex) {
  if (pieces.empty()) return "0";
  std::string out;
  for (const auto& [c, m] : pieces) {
    std::string coef = c;
    bool neg = false;
    bool compound = coef.find(" + ") != std::string::npos || coef.find(" - ") != std::string::npos ||
                    coef.find(")/(") != std::string::npos || coef.find("\\frac{") != std::string::npos;
    if (!compound && !coef.empty() && coef[0] == '-') {
      neg = true;
      coef.erase(0, 1);
    }
    std::string body;
    if (m.empty()) {
      body = compound ? "(" + coef + ")" : coef;
    } else if (coef == "1") {
      body = m;
    } else if (compound) {
      body = (latex ? "\\left(" + coef + "\\right)" : "(" + coef + ")") + (latex ? "" : "*") + m;
    } else {
      body = coef + (latex ? "" : "*") + m;
    }
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace

std::string MPoly::str() const {
  std::vector<std::pair<std::string, std::string>> pieces;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) pieces.emplace_back(it->second.str(), mono_text(vars_, it->first));
  return join_terms(pieces, false);
}

std::string MPoly::latex() const {
  std::vector<std::pair<std::string, std::string>> pieces;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) pieces.emplace_back(coef_latex(it->second), mono_latex(vars_, it->first));
  return join_terms(pieces, true);
}

std::string coef_latex(const Coef& c) {
  if (c.is_zero()) return "0";
  const char* s1 = c.ring() == 0 ? "q" : "u";
  const char* s2 = c.ring() == 0 ? "t" : "\\zeta";
  std::string out;
  const auto& ts = c.terms();
  for (std::size_t k = ts.size(); k-- > 0;) {
    const auto& t = ts[k];
    std::string m;
    auto put = [&](const char* s, int e) {
      if (e == 0) return;
      m += s;
      if (e != 1) m += "^{" + std::to_string(e) + "}";
    };
    put(s1, t.e1);
    put(s2, t.e2);
    Rational r = t.c;
    bool neg = r.sign() < 0;
    if (neg) r.negate();
    std::string num;
    if (r.is_integer()) {
      num = r.str();
    } else {
      num = "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
    }
    std::string body = m.empty() ? num : (r.is_one() ? m : num + m);
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string frac_latex(const Frac& f) {
  if (f.den().is_one()) return coef_latex(f.num());
  return "\\frac{" + coef_latex(f.num()) + "}{" + coef_latex(f.den()) + "}";
}

// ---------------------------------------------------------------- substitution

namespace {

Coef coef_power(const Coef& base, int k) {
  if (k == 0) return Coef(1);
  if (k < 0) {
    if (base.is_monomial()) {
      const Term2& t = base.leading();
      return coef_power(Coef::monomial(base.ring(), -t.e1, -t.e2, t.c.inverse()), -k);
    }
    throw std::domain_error("negative exponent on a non-invertible letter");
  }
  Coef r(1), b = base;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

}  // namespace

MPoly substitute(const MPoly& f, const EvalAlphabet& alpha) {
  int n = f.nvars();
  if (static_cast<int>(alpha.letters.size()) != n) throw std::invalid_argument("alphabet length does not match arity");
  for (const auto& l : alpha.letters) {
    if (l.scale.is_zero()) throw std::invalid_argument("zero letter");
    if (l.var >= alpha.target.size()) throw std::invalid_argument("letter variable out of range");
  }
  std::vector<std::map<int, Coef>> cache(n);
  auto power = [&](int i, int k) -> const Coef& {
    auto it = cache[i].find(k);
    if (it != cache[i].end()) return it->second;
    return cache[i].emplace(k, coef_power(alpha.letters[i].scale, k)).first->second;
  };
  std::vector<MPoly::Term> out;
  out.reserve(f.size());
  for (const auto& [e, c] : f.terms()) {
    Exp ne{};
    Coef val = c;
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      const Letter& l = alpha.letters[i];
      if (!l.scale.is_one()) val = val * power(i, e[i]);
      if (l.var >= 0) ne[l.var] = static_cast<std::int16_t>(ne[l.var] + e[i]);
    }
    out.emplace_back(ne, std::move(val));
  }
  return MPoly::from_terms(alpha.target, std::move(out));
}

Coef evaluate(const MPoly& f, const std::vector<Coef>& point) {
  EvalAlphabet a;
  for (const auto& c : point) {
    if (c.is_zero()) {
      // direct evaluation so zero coordinates are allowed for nonnegative exponents
      Coef sum;
      for (const auto& [e, coef] : f.terms()) {
        Coef v = coef;
        for (int i = 0; i < f.nvars(); ++i) v = v * coef_power(point[i], e[i]);
        sum += v;
      }
      return sum;
    }
    a.letters.push_back(Letter{c, -1});
  }
  MPoly r = substitute(f, a);
  return r.is_zero() ? Coef() : r.terms().front().second;
}

// ---------------------------------------------------------------- fraction form

bool operator==(const FracPoly& a, const FracPoly& b) {
  if (!(a.vars == b.vars) || a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].first != b.terms[i].first || !(a.terms[i].second == b.terms[i].second)) return false;
  return true;
}

std::string FracPoly::str() const {
  std::vector<std::pair<std::string, std::string>> pieces;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) pieces.emplace_back(it->second.str(), mono_text(vars, it->first));
  return join_terms(pieces, false);
}

std::string FracPoly::latex() const {
  std::vector<std::pair<std::string, std::string>> pieces;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) pieces.emplace_back(frac_latex(it->second), mono_latex(vars, it->first));
  return join_terms(pieces, true);
}

nlohmann::json FracPoly::to_json() const {
  nlohmann::json j;
  j["vars"] = vars.names();
  int ring = 0;
  for (const auto& t : terms) ring = std::max(ring, t.second.ring());
  j["ring"] = ring;
  j["terms"] = nlohmann::json::array();
  for (const auto& [e, c] : terms) {
    j["terms"].push_back({{"exp", exp_vector(e, vars.size())}, {"num", c.num().str()}, {"den", c.den().str()}});
  }
  return j;
}

FracPoly to_frac_poly(const MPoly& f, const Coef& scale) {
  FracPoly out;
  out.vars = f.vars();
  out.terms.reserve(f.size());
  for (const auto& [e, c] : f.terms()) out.terms.emplace_back(e, Frac(c, scale));
  return out;
}

std::pair<MPoly, Coef> clear_denominators(const FracPoly& f) {
  Coef l(1);
  for (const auto& [e, c] : f.terms) {
    if (c.den().is_one()) continue;
    Coef g = gcd(l, c.den());
    l = *(l * c.den()).divide_exact(g);
  }
  std::vector<MPoly::Term> ts;
  for (const auto& [e, c] : f.terms) ts.emplace_back(e, c.num() * *l.divide_exact(c.den()));
  return {MPoly::from_terms(f.vars, std::move(ts)), l};
}

}  // namespace macfact
