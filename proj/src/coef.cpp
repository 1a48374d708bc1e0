#include "macfact/coef.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace macfact {

// ---------------------------------------------------------------- cyclotomics

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense dense_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

// Long division; b must be nonzero.
std::pair<Dense, Dense> dense_divmod(Dense a, const Dense& b) {
  trim(a);
  if (b.empty()) throw std::domain_error("division by zero");
  if (a.size() < b.size()) return {Dense{}, a};
  Dense q(a.size() - b.size() + 1);
  Rational inv = b.back().inverse();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k].is_zero()) {
      if (k == 0) break;
      continue;
    }
    Rational f = a[k] * inv;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    if (k == 0) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

struct CycloTables {
  Dense phi_poly;
  std::vector<Dense> powers;  // z^j mod Phi_m for j in [0, m)
};

std::mutex g_cyclo_mutex;
std::map<int, CycloTables>& cyclo_cache() {
  static std::map<int, CycloTables> cache;
  return cache;
}

const CycloTables& tables(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    auto it = cyclo_cache().find(m);
    if (it != cyclo_cache().end()) return it->second;
  }
  // z^m - 1 divided by Phi_d for proper divisors d.
  Dense p(m + 1);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const Dense& f = tables(d).phi_poly;
    p = dense_divmod(p, f).first;
  }
  CycloTables t;
  t.phi_poly = p;
  std::size_t deg = p.size() - 1;
  Dense cur(deg == 0 ? 1 : deg);
  cur[0] = 1;
  for (int j = 0; j < m; ++j) {
    Dense stored = cur;
    stored.resize(std::max<std::size_t>(deg, 1));
    t.powers.push_back(stored);
    // multiply by z and reduce
    Dense next(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    if (deg > 0 && next.size() > deg && !next[deg].is_zero()) {
      Rational top = next[deg];
      for (std::size_t i = 0; i < deg; ++i) next[i] -= top * p[i];
    }
    next.resize(std::max<std::size_t>(deg, 1));
    if (deg == 0) next = Dense{1};
    cur = next;
  }
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  return cyclo_cache().emplace(m, std::move(t)).first->second;
}

int positive_mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

int euler_phi(int m) {
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rational>& cyclotomic_poly(int m) { return tables(m).phi_poly; }

const std::vector<Rational>& cyclotomic_power(int m, int j) { return tables(m).powers.at(positive_mod(j, m)); }

// ---------------------------------------------------------------- Coef basics

Coef::Coef(const Rational& r) {
  if (!r.is_zero()) terms_.push_back(Term2{0, 0, r});
}

Coef Coef::monomial(int ring, int e1, int e2, const Rational& c) {
  Coef r;
  r.ring_ = ring;
  if (!c.is_zero()) {
    r.terms_.push_back(Term2{e1, e2, c});
    r.canonicalize();
  }
  return r;
}

Coef Coef::from_terms(int ring, std::vector<Term2> terms) {
  Coef r;
  r.ring_ = ring;
  r.terms_ = std::move(terms);
  r.canonicalize();
  return r;
}

bool Coef::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].e1 == 0 && terms_[0].e2 == 0); }

bool Coef::is_one() const { return terms_.size() == 1 && terms_[0].e1 == 0 && terms_[0].e2 == 0 && terms_[0].c.is_one(); }

Rational Coef::constant_term() const {
  for (const auto& t : terms_)
    if (t.e1 == 0 && t.e2 == 0) return t.c;
  return Rational(0);
}

int Coef::join(const Coef& a, const Coef& b) {
  if (a.ring_ == b.ring_) return a.ring_;
  if (a.is_constant()) return b.ring_;
  if (b.is_constant()) return a.ring_;
  throw std::logic_error("coefficient ring mismatch");
}

void Coef::canonicalize() {
  if (ring_ >= 1) {
    int m = ring_;
    int phi = euler_phi(m);
    bool needs = false;
    for (const auto& t : terms_)
      if (t.e2 < 0 || t.e2 >= phi) {
        needs = true;
        break;
      }
    if (needs) {
      std::vector<Term2> out;
      out.reserve(terms_.size());
      for (auto& t : terms_) {
        if (t.e2 >= 0 && t.e2 < phi) {
          out.push_back(std::move(t));
          continue;
        }
        const Dense& red = cyclotomic_power(m, t.e2);
        for (std::size_t j = 0; j < red.size(); ++j) {
          if (red[j].is_zero()) continue;
          out.push_back(Term2{t.e1, static_cast<std::int32_t>(j), t.c * red[j]});
        }
      }
      terms_ = std::move(out);
    }
  }
  auto less = [](const Term2& x, const Term2& y) { return x.e1 != y.e1 ? x.e1 < y.e1 : x.e2 < y.e2; };
  if (!std::is_sorted(terms_.begin(), terms_.end(), less)) std::sort(terms_.begin(), terms_.end(), less);
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms_.size();) {
    std::size_t s = r + 1;
    Rational acc = std::move(terms_[r].c);
    while (s < terms_.size() && terms_[s].e1 == terms_[r].e1 && terms_[s].e2 == terms_[r].e2) {
      acc += terms_[s].c;
      ++s;
    }
    if (!acc.is_zero()) {
      terms_[w].e1 = terms_[r].e1;
      terms_[w].e2 = terms_[r].e2;
      terms_[w].c = std::move(acc);
      ++w;
    }
    r = s;
  }
  terms_.resize(w);
}

Coef Coef::operator-() const {
  Coef r(*this);
  for (auto& t : r.terms_) t.c.negate();
  return r;
}

namespace {

// Merge b (optionally negated, shifted by d1 in e1 and d2 in e2, order preserved) into a.
std::vector<Term2> merge_terms(const std::vector<Term2>& a, const std::vector<Term2>& b, int d1, int d2, bool neg) {
  std::vector<Term2> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    int be1 = b[j].e1 + d1, be2 = b[j].e2 + d2;
    if (i == a.size() || be1 < a[i].e1 || (be1 == a[i].e1 && be2 < a[i].e2)) {
      out.push_back(Term2{be1, be2, neg ? -b[j].c : b[j].c});
      ++j;
    } else if (be1 == a[i].e1 && be2 == a[i].e2) {
      Rational s = neg ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!s.is_zero()) out.push_back(Term2{be1, be2, std::move(s)});
      ++i;
      ++j;
    } else {
      out.push_back(a[i++]);
    }
  }
  return out;
}

}  // namespace

void Coef::add_shifted(const Coef& other, int d1, int d2, bool negate) {
  if (other.terms_.empty()) return;
  int ring = join(*this, other);
  if (ring >= 1 && d2 != 0) {
    Coef s = other.shifted(d1, d2);
    ring_ = ring;
    terms_ = merge_terms(terms_, s.terms_, 0, 0, negate);
    return;
  }
  ring_ = ring;
  if (terms_.empty()) {
    terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) terms_.push_back(Term2{t.e1 + d1, t.e2 + d2, negate ? -t.c : t.c});
    return;
  }
  terms_ = merge_terms(terms_, other.terms_, d1, d2, negate);
}

Coef& Coef::operator+=(const Coef& o) {
  add_shifted(o, 0, 0, false);
  return *this;
}

Coef& Coef::operator-=(const Coef& o) {
  add_shifted(o, 0, 0, true);
  return *this;
}

Coef Coef::scaled(const Rational& r) const {
  if (r.is_zero()) {
    Coef z;
    z.ring_ = ring_;
    return z;
  }
  Coef out(*this);
  if (r.is_one()) return out;
  for (auto& t : out.terms_) t.c *= r;
  return out;
}

Coef Coef::shifted(int d1, int d2) const {
  Coef out(*this);
  out.shift_inplace(d1, d2);
  return out;
}

void Coef::shift_inplace(int d1, int d2) {
  for (auto& t : terms_) {
    t.e1 += d1;
    t.e2 += d2;
  }
  if (ring_ >= 1 && d2 != 0) canonicalize();
}

Coef operator*(const Coef& a, const Coef& b) {
  int ring = Coef::join(a, b);
  if (a.terms_.empty() || b.terms_.empty()) {
    Coef z;
    z.ring_ = ring;
    return z;
  }
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const Coef& mono = a.terms_.size() == 1 ? a : b;
    const Coef& other = a.terms_.size() == 1 ? b : a;
    Coef out = other.scaled(mono.terms_[0].c);
    out.ring_ = ring;
    out.shift_inplace(mono.terms_[0].e1, mono.terms_[0].e2);
    return out;
  }
  const Coef& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const Coef& big = &small == &a ? b : a;
  if (small.terms_.size() <= 8) {
    Coef out;
    out.ring_ = ring;
    for (const auto& m : small.terms_) {
      Coef piece = big.scaled(m.c);
      piece.ring_ = ring;
      out.add_shifted(piece, m.e1, m.e2, false);
    }
    return out;
  }
  std::vector<Term2> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back(Term2{x.e1 + y.e1, x.e2 + y.e2, x.c * y.c});
  return Coef::from_terms(ring, std::move(prod));
}

Coef& Coef::operator*=(const Coef& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const Coef& a, const Coef& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ != b.ring_ && !(a.is_constant() && b.is_constant())) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.e1 != y.e1 || x.e2 != y.e2 || !(x.c == y.c)) return false;
  }
  return true;
}

int Coef::min_e1() const { return terms_.empty() ? 0 : terms_.front().e1; }
int Coef::max_e1() const { return terms_.empty() ? 0 : terms_.back().e1; }
int Coef::min_e2() const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.e2 < m) m = t.e2;
    first = false;
  }
  return m;
}
int Coef::max_e2() const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.e2 > m) m = t.e2;
    first = false;
  }
  return m;
}

Rational Coef::content() const {
  if (terms_.empty()) return Rational(1);
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto& t : terms_) {
    g = gcd(g, t.c.numerator());
    mpz_class d = t.c.denominator();
    mpz_class gg = gcd(l, d);
    l = l / gg * d;
  }
  mpq_class c(g, l);
  c.canonicalize();
  if (terms_.back().c.sign() < 0) c = -c;
  return Rational(c);
}

Coef Coef::primitive() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (c.is_one()) return *this;
  return scaled(c.inverse());
}

std::size_t Coef::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& t : terms_) {
    h ^= static_cast<std::size_t>(t.e1) * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(t.e2) * 1000003u;
    h = h * 1099511628211ull ^ t.c.hash();
  }
  return h;
}

// ---------------------------------------------------------------- printing

namespace {

std::string mono_str(const char* s1, int e1, const char* s2, int e2) {
  std::string out;
  auto put = [&](const char* s, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += s;
    if (e != 1) out += "^" + std::to_string(e);
  };
  put(s1, e1);
  put(s2, e2);
  return out;
}

}  // namespace

std::string Coef::str() const {
  if (terms_.empty()) return "0";
  const char* s1 = ring_ == 0 ? "q" : "u";
  const char* s2 = ring_ == 0 ? "t" : "zeta";
  std::string out;
  for (std::size_t k = terms_.size(); k-- > 0;) {
    const auto& t = terms_[k];
    std::string m = mono_str(s1, t.e1, s2, t.e2);
    Rational c = t.c;
    bool neg = c.sign() < 0;
    if (neg) c.negate();
    std::string body;
    if (m.empty()) {
      body = c.str();
    } else if (c.is_one()) {
      body = m;
    } else {
      body = c.str() + "*" + m;
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

// ---------------------------------------------------------------- field Q(zeta_m)

namespace {

// Element of Q(zeta_m) as dense coefficients of length phi(m).
struct KField {
  int m;
  int phi;
  explicit KField(int m_) : m(m_), phi(euler_phi(m_)) {}

  Dense zero() const { return Dense(phi); }
  Dense one() const {
    Dense r(phi);
    r[0] = 1;
    return r;
  }
  static bool is_zero(const Dense& a) {
    for (const auto& x : a)
      if (!x.is_zero()) return false;
    return true;
  }
  Dense add(const Dense& a, const Dense& b) const {
    Dense r(a);
    for (int i = 0; i < phi; ++i) r[i] += b[i];
    return r;
  }
  Dense sub(const Dense& a, const Dense& b) const {
    Dense r(a);
    for (int i = 0; i < phi; ++i) r[i] -= b[i];
    return r;
  }
  Dense mul(const Dense& a, const Dense& b) const {
    if (phi == 1) return Dense{a[0] * b[0]};
    Dense r(phi);
    for (int i = 0; i < phi; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < phi; ++j) {
        if (b[j].is_zero()) continue;
        Rational p = a[i] * b[j];
        if (i + j < phi) {
          r[i + j] += p;
        } else {
          const Dense& red = cyclotomic_power(m, i + j);
          for (int k = 0; k < phi; ++k)
            if (!red[k].is_zero()) r[k] += p * red[k];
        }
      }
    }
    return r;
  }
  Dense inv(const Dense& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    if (phi == 1) return Dense{a[0].inverse()};
    // extended Euclid: find s with s*a = 1 mod Phi_m
    Dense r0 = cyclotomic_poly(m), r1 = a;
    trim(r1);
    Dense s0{}, s1{Rational(1)};
    while (!r1.empty()) {
      auto [qq, rr] = dense_divmod(r0, r1);
      Dense s2 = s0;
      Dense qs = dense_mul(qq, s1);
      s2.resize(std::max(s2.size(), qs.size()));
      for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      trim(s2);
      r0 = std::move(r1);
      r1 = std::move(rr);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant
    Rational c = r0[0].inverse();
    Dense out(phi);
    Dense red = dense_divmod(s0, cyclotomic_poly(m)).second;
    for (std::size_t i = 0; i < red.size() && i < static_cast<std::size_t>(phi); ++i) out[i] = red[i] * c;
    return out;
  }
};

using UPolyK = std::vector<Dense>;  // ascending in u

void trimK(UPolyK& p) {
  while (!p.empty() && KField::is_zero(p.back())) p.pop_back();
}

// Dense view of a cyclotomic-ring Coef shifted so the lowest u-power is zero.
UPolyK to_upoly(const Coef& c, const KField& K, int& low) {
  low = c.min_e1();
  UPolyK p(c.is_zero() ? 0 : c.max_e1() - low + 1, K.zero());
  for (const auto& t : c.terms()) p[t.e1 - low][t.e2] += t.c;
  trimK(p);
  return p;
}

Coef from_upoly(const UPolyK& p, int ring, int low) {
  std::vector<Term2> ts;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      if (!p[i][j].is_zero()) ts.push_back(Term2{static_cast<std::int32_t>(i) + low, static_cast<std::int32_t>(j), p[i][j]});
  return Coef::from_terms(ring, std::move(ts));
}

// Returns false if b does not divide a.
bool divmodK(const KField& K, UPolyK a, const UPolyK& b, UPolyK* quot, UPolyK* rem) {
  trimK(a);
  if (b.empty()) throw std::domain_error("division by zero");
  UPolyK q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, K.zero());
  Dense inv = K.inv(b.back());
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Dense f = K.mul(a.back(), inv);
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = K.sub(a[shift + j], K.mul(f, b[j]));
    q[shift] = f;
    a.pop_back();
    trimK(a);
  }
  trimK(q);
  if (quot) *quot = q;
  if (rem) *rem = a;
  return a.empty();
}

UPolyK monicK(const KField& K, const UPolyK& p) {
  if (p.empty()) return p;
  Dense inv = K.inv(p.back());
  UPolyK r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = K.mul(p[i], inv);
  return r;
}

UPolyK gcdK(const KField& K, UPolyK a, UPolyK b) {
  trimK(a);
  trimK(b);
  while (!b.empty()) {
    UPolyK r;
    divmodK(K, a, b, nullptr, &r);
    a = std::move(b);
    b = monicK(K, r);
  }
  return monicK(K, a);
}

// ---------------------------------------------------------------- Q[q][t] for the generic ring

using UQ = Dense;             // ascending in q
using BiQ = std::vector<UQ>;  // ascending in t

UQ uq_sub(const UQ& a, const UQ& b) {
  UQ r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UQ uq_monic(const UQ& p) {
  if (p.empty()) return p;
  Rational inv = p.back().inverse();
  UQ r(p);
  for (auto& x : r) x *= inv;
  return r;
}

UQ uq_gcd(UQ a, UQ b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UQ r = dense_divmod(a, b).second;
    a = std::move(b);
    b = uq_monic(r);
  }
  return uq_monic(a);
}

UQ uq_exact(const UQ& a, const UQ& b) {
  auto [q, r] = dense_divmod(a, b);
  if (!r.empty()) throw std::logic_error("inexact division in content computation");
  return q;
}

void bi_trim(BiQ& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UQ bi_content(const BiQ& p) {
  UQ g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? uq_monic(c) : uq_gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

BiQ bi_divide_content(const BiQ& p, const UQ& c) {
  BiQ r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].empty()) r[i] = uq_exact(p[i], c);
  return r;
}

BiQ bi_pp(const BiQ& p) {
  if (p.empty()) return p;
  UQ c = bi_content(p);
  if (c.size() == 1) {
    // only rational content; normalize leading coefficient's leading term to 1
    Rational inv = p.back().back().inverse();
    BiQ r(p);
    for (auto& x : r)
      for (auto& y : x) y *= inv;
    return r;
  }
  return bi_divide_content(p, c);
}

BiQ bi_prem(BiQ a, const BiQ& b) {
  bi_trim(a);
  const UQ& lb = b.back();
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    UQ la = a.back();
    // a = lb * a - la * t^shift * b
    for (auto& c : a) c = dense_mul(c, lb);
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = uq_sub(a[shift + j], dense_mul(la, b[j]));
    bi_trim(a);
  }
  return a;
}

BiQ to_bi(const Coef& c, int& lowq, int& lowt) {
  lowq = c.min_e1();
  lowt = c.min_e2();
  if (c.is_zero()) return {};
  BiQ p(c.max_e2() - lowt + 1);
  for (const auto& t : c.terms()) {
    UQ& row = p[t.e2 - lowt];
    if (row.size() <= static_cast<std::size_t>(t.e1 - lowq)) row.resize(t.e1 - lowq + 1);
    row[t.e1 - lowq] += t.c;
  }
  for (auto& row : p) trim(row);
  bi_trim(p);
  return p;
}

Coef from_bi(const BiQ& p) {
  std::vector<Term2> ts;
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].size(); ++i)
      if (!p[j][i].is_zero()) ts.push_back(Term2{static_cast<std::int32_t>(i), static_cast<std::int32_t>(j), p[j][i]});
  return Coef::from_terms(0, std::move(ts));
}

Coef normalize_gcd_result(Coef g) {
  if (g.is_zero()) return g;
  g = g.shifted(-g.min_e1(), -g.min_e2());
  return g.primitive();
}

}  // namespace

// ---------------------------------------------------------------- division & gcd

std::optional<Coef> Coef::divide_exact(const Coef& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  int ring = join(*this, d);
  if (terms_.empty()) {
    Coef z;
    z.ring_ = ring;
    return z;
  }
  if (d.terms_.size() == 1) {
    const auto& m = d.terms_[0];
    Coef out = scaled(m.c.inverse());
    out.ring_ = ring;
    out.shift_inplace(-m.e1, -m.e2);
    return out;
  }
  if (ring >= 1) {
    KField K(ring);
    int la, lb;
    UPolyK a = to_upoly(*this, K, la);
    UPolyK b = to_upoly(d, K, lb);
    UPolyK q;
    if (a.size() < b.size()) return std::nullopt;
    if (!divmodK(K, a, b, &q, nullptr)) return std::nullopt;
    return from_upoly(q, ring, la - lb);
  }
  // generic ring: lex division after moving both to polynomials
  int a1 = min_e1(), a2 = min_e2(), b1 = d.min_e1(), b2 = d.min_e2();
  std::map<std::pair<int, int>, Rational> rem;
  for (const auto& t : terms_) rem.emplace(std::make_pair(t.e1 - a1, t.e2 - a2), t.c);
  std::vector<Term2> dv;
  for (const auto& t : d.terms_) dv.push_back(Term2{t.e1 - b1, t.e2 - b2, t.c});
  const Term2& lt = dv.back();  // lex-largest
  Rational linv = lt.c.inverse();
  int maxa2 = max_e2() - a2;
  std::vector<Term2> quot;
  while (!rem.empty()) {
    auto it = std::prev(rem.end());
    int q1 = it->first.first - lt.e1;
    int q2 = it->first.second - lt.e2;
    if (q1 < 0 || q2 < 0 || q2 > maxa2) return std::nullopt;
    Rational f = it->second * linv;
    for (const auto& t : dv) {
      auto key = std::make_pair(t.e1 + q1, t.e2 + q2);
      auto jt = rem.find(key);
      Rational prod = f * t.c;
      if (jt == rem.end()) {
        prod.negate();
        rem.emplace(key, std::move(prod));
      } else {
        jt->second -= prod;
        if (jt->second.is_zero()) rem.erase(jt);
      }
    }
    quot.push_back(Term2{q1 + a1 - b1, q2 + a2 - b2, std::move(f)});
  }
  return Coef::from_terms(0, std::move(quot));
}

Coef gcd(const Coef& a, const Coef& b) {
  int ring = Coef::join(a, b);
  if (a.is_zero() && b.is_zero()) return Coef();
  if (a.is_zero()) return normalize_gcd_result(Coef::from_terms(ring, b.terms()));
  if (b.is_zero()) return normalize_gcd_result(Coef::from_terms(ring, a.terms()));
  if (a.size() == 1 || b.size() == 1) return Coef::monomial(ring, 0, 0);
  if (ring >= 1) {
    KField K(ring);
    int la, lb;
    UPolyK g = gcdK(K, to_upoly(a, K, la), to_upoly(b, K, lb));
    Coef r = from_upoly(g, ring, 0);
    // clear denominators; leading term positive
    return normalize_gcd_result(r);
  }
  int qa, ta, qb, tb;
  BiQ A = to_bi(a, qa, ta);
  BiQ B = to_bi(b, qb, tb);
  UQ ca = bi_content(A), cb = bi_content(B);
  UQ c = uq_gcd(ca, cb);
  A = bi_divide_content(A, ca);
  B = bi_divide_content(B, cb);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty() && B.size() > 1) {
    BiQ R = bi_prem(A, B);
    A = std::move(B);
    B = R.empty() ? R : bi_pp(R);
  }
  BiQ G;
  if (B.empty()) {
    G = bi_pp(A);
  } else {
    // B has degree 0 in t: gcd content-only, and B is primitive so it is a unit
    G = BiQ{UQ{Rational(1)}};
  }
  for (auto& row : G) row = dense_mul(row, c);
  return normalize_gcd_result(from_bi(G));
}

Coef eval_u_at_one(const Coef& c) {
  std::vector<Term2> ts;
  for (const auto& t : c.terms()) ts.push_back(Term2{0, t.e2, t.c});
  return Coef::from_terms(c.ring(), std::move(ts));
}

Coef top_coefficient(const Coef& c) {
  if (c.is_zero()) return c;
  int top = c.max_e1();
  std::vector<Term2> ts;
  for (const auto& t : c.terms())
    if (t.e1 == top) ts.push_back(Term2{0, t.e2, t.c});
  return Coef::from_terms(c.ring(), std::move(ts));
}

Coef field_inverse(const Coef& k) {
  if (k.is_zero()) throw std::domain_error("division by zero");
  if (k.is_monomial()) return Coef::monomial(k.ring(), -k.leading().e1, -k.leading().e2, k.leading().c.inverse());
  if (k.ring() == 0) throw std::domain_error("not invertible in the generic ring");
  KField K(k.ring());
  Dense a = K.zero();
  for (const auto& t : k.terms()) {
    if (t.e1 != 0) throw std::domain_error("not a field element");
    a[t.e2] += t.c;
  }
  Dense inv = K.inv(a);
  std::vector<Term2> ts;
  for (int j = 0; j < K.phi; ++j)
    if (!inv[j].is_zero()) ts.push_back(Term2{0, j, inv[j]});
  return Coef::from_terms(k.ring(), std::move(ts));
}

}  // namespace macfact
