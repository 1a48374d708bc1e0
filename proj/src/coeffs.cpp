#include "macfact/coeffs.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace macfact {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

[[noreturn]] void bad_spec(std::string_view text) { throw std::invalid_argument("malformed spec string: " + std::string(text)); }

long parse_int(const std::string& s, std::size_t& pos, std::string_view whole) {
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) bad_spec(whole);
  return std::stol(s.substr(start, pos - start));
}

// "u", "u^K", "1"; returns the u-exponent.
long parse_upow(const std::string& s, std::size_t& pos, std::string_view whole) {
  if (pos < s.size() && s[pos] == '1') {
    ++pos;
    return 0;
  }
  if (pos >= s.size() || s[pos] != 'u') bad_spec(whole);
  ++pos;
  if (pos < s.size() && s[pos] == '^') {
    ++pos;
    return parse_int(s, pos, whole);
  }
  return 1;
}

}  // namespace

SpecQT SpecQT::parse(std::string_view text) {
  std::string s = strip(text);
  SpecQT out;
  bool have_t = false, have_q = false;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(';', start);
    if (end == std::string::npos) end = s.size();
    std::string part = s.substr(start, end - start);
    start = end + 1;
    if (part.empty()) {
      if (end == s.size()) break;
      continue;
    }
    if (part.size() < 3 || part[1] != '=') bad_spec(text);
    std::size_t pos = 2;
    if (part[0] == 't') {
      if (have_t) bad_spec(text);
      have_t = true;
      long b = parse_upow(part, pos, text);
      if (b < 0) bad_spec(text);
      out.b = static_cast<int>(b);
    } else if (part[0] == 'q') {
      if (have_q) bad_spec(text);
      have_q = true;
      int m = 1, e = 0;
      if (pos < part.size() && part[pos] == '-') {
        m = 2;
        e = 1;
        ++pos;
      }
      if (part.compare(pos, 5, "zeta(") == 0) {
        pos += 5;
        long mm = parse_int(part, pos, text);
        if (pos >= part.size() || part[pos] != ',') bad_spec(text);
        ++pos;
        long ee = parse_int(part, pos, text);
        if (pos >= part.size() || part[pos] != ')') bad_spec(text);
        ++pos;
        if (mm < 1) bad_spec(text);
        // combine with a leading sign: -zeta(M,E) = zeta(2M, 2E + M)
        if (m == 2) {
          e = static_cast<int>(2 * ee + mm);
          m = static_cast<int>(2 * mm);
        } else {
          m = static_cast<int>(mm);
          e = static_cast<int>(ee);
        }
        if (pos < part.size()) {
          if (part[pos] != '*') bad_spec(text);
          ++pos;
        } else {
          part += "1";
        }
      }
      long a = parse_upow(part, pos, text);
      out.a = static_cast<int>(-a);
      out.m = m;
      out.e = e;
    } else {
      bad_spec(text);
    }
    if (pos != part.size()) bad_spec(text);
  }
  if (!have_t || !have_q) bad_spec(text);
  return out.canonical();
}

SpecQT SpecQT::canonical() const {
  SpecQT s = *this;
  if (s.m < 1) throw std::invalid_argument("root of unity order must be positive");
  s.e = ((s.e % s.m) + s.m) % s.m;
  int g = std::gcd(s.e, s.m);
  if (s.e == 0) {
    s.m = 1;
  } else {
    s.m /= g;
    s.e /= g;
  }
  return s;
}

SpecQT SpecQT::admissible(int l, int s, int choice) {
  if (l < 1 || s < 2) throw std::invalid_argument("admissible specialization needs l >= 1, s >= 2");
  int g = std::gcd(l + 1, s - 1);
  int b = (s - 1) / g;
  int a = (l + 1) / g;
  int k = 0;
  for (int M = 1; M <= g * b; ++M) {
    for (int e = 0; e < M; ++e) {
      if (std::gcd(e, M) != 1 && !(M == 1 && e == 0)) continue;
      // omega = zeta_M^e has order M; omega^b has order M / gcd(M, b)
      if (M / std::gcd(M, b) != g) continue;
      if (k++ == choice) return SpecQT{b, a, M, e}.canonical();
    }
  }
  throw std::invalid_argument("no admissible specialization with that index");
}

std::string SpecQT::str() const {
  std::string out = "t=u^" + std::to_string(b) + "; q=";
  if (m != 1) out += "zeta(" + std::to_string(m) + "," + std::to_string(e) + ")*";
  out += "u^" + std::to_string(-a);
  return out;
}

// ---------------------------------------------------------------- Field

Field Field::special(const SpecQT& s) {
  Field f;
  f.special_ = true;
  f.spec_ = s.canonical();
  return f;
}

Field Field::perturbed(const SpecQT& s, int order) {
  if (order < 1) throw std::invalid_argument("perturbation order must be positive");
  Field f = special(s);
  if (f.spec_.m > 2) throw std::invalid_argument("perturbation needs a rational omega");
  f.order_ = order;
  return f;
}

Coef Field::truncate(const Coef& c) const {
  if (!order_ || c.is_zero() || c.max_e1() < order_) return c;
  std::vector<Term2> ts;
  for (const auto& t : c.terms())
    if (t.e1 < order_) ts.push_back(t);
  return Coef::from_terms(0, std::move(ts));
}

Coef Field::qt(int A, int B, const Rational& c) const {
  if (!special_) return Coef::monomial(0, A, B, c);
  if (!order_) return Coef::monomial(spec_.m, spec_.b * B - spec_.a * A, spec_.e * A, c);
  // c * omega^A * (1+eps)^A * u^(bB-aA), binomial series cut at eps^order
  Rational lead = (spec_.m == 2 && (spec_.e * A) % 2 != 0) ? -c : c;
  int ue = spec_.b * B - spec_.a * A;
  std::vector<Term2> ts;
  Rational binom(1);
  for (int k = 0; k < order_; ++k) {
    if (binom.is_zero()) break;
    ts.push_back(Term2{k, ue, lead * binom});
    binom = binom * Rational(A - k) / Rational(k + 1);
  }
  return Coef::from_terms(0, std::move(ts));
}

std::pair<int, int> Field::t_shift() const {
  if (!special_) return {0, 1};
  if (order_) return {0, spec_.b};
  return {spec_.b, 0};
}

Coef Field::map(const Coef& generic) const {
  if (!special_) return generic;
  if (generic.ring() != 0 && !generic.is_constant()) throw std::logic_error("map expects a generic element");
  if (order_) {
    Coef out;
    for (const auto& t : generic.terms()) out += qt(t.e1, t.e2, t.c);
    return out;
  }
  std::vector<Term2> ts;
  ts.reserve(generic.size());
  for (const auto& t : generic.terms())
    ts.push_back(Term2{spec_.b * t.e2 - spec_.a * t.e1, spec_.e * t.e1, t.c});
  return Coef::from_terms(spec_.m, std::move(ts));
}

std::string Field::str() const {
  if (!special_) return "generic";
  if (order_) return spec_.str() + " +O(eps^" + std::to_string(order_) + ")";
  return spec_.str();
}

// ---------------------------------------------------------------- Frac

Frac::Frac(const Coef& n, const Coef& d) : num_(n), den_(d) { normalize(); }

void Frac::normalize() {
  if (den_.is_zero()) throw std::domain_error("division by zero");
  int ring = Coef::join(num_, den_);
  if (num_.is_zero()) {
    num_ = Coef();
    den_ = Coef(1);
    return;
  }
  if (!den_.is_constant()) {
    Coef g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  if (ring == 0) {
    int d1 = den_.min_e1(), d2 = den_.min_e2();
    if (d1 != 0 || d2 != 0) {
      num_.shift_inplace(-d1, -d2);
      den_.shift_inplace(-d1, -d2);
    }
    Rational c = den_.content();
    if (!c.is_one()) {
      Rational inv = c.inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  } else {
    int d1 = den_.min_e1();
    if (d1 != 0) {
      num_.shift_inplace(-d1, 0);
      den_.shift_inplace(-d1, 0);
    }
    Coef inv = field_inverse(top_coefficient(den_));
    if (!inv.is_one()) {
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }
  if (den_.is_constant()) den_ = Coef(1);
}

bool Frac::is_monomial() const {
  if (num_.is_zero() || !den_.is_one()) return false;
  if (num_.is_monomial()) return true;
  int ring = num_.ring();
  if (ring == 0) return false;
  int e1 = num_.terms().front().e1;
  for (const auto& t : num_.terms())
    if (t.e1 != e1) return false;
  Coef k = num_.shifted(-e1, 0);
  for (int j = 0; j < ring; ++j) {
    Coef r = k * Coef::monomial(ring, 0, -j);
    if (r.is_constant()) return true;
  }
  return false;
}

Frac Frac::operator-() const {
  Frac r(*this);
  r.num_ = -r.num_;
  return r;
}

Frac operator+(const Frac& a, const Frac& b) {
  if (a.den_ == b.den_) return Frac(a.num_ + b.num_, a.den_);
  return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }

Frac operator*(const Frac& a, const Frac& b) { return Frac(a.num_ * b.num_, a.den_ * b.den_); }

Frac Frac::inverse() const {
  if (num_.is_zero()) throw std::domain_error("division by zero");
  return Frac(den_, num_);
}

Frac operator/(const Frac& a, const Frac& b) { return a * b.inverse(); }

std::string Frac::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Frac specialize(const Frac& f, const Field& field) {
  if (field.is_generic()) return f;
  Coef d = field.map(f.den());
  if (d.is_zero()) throw std::domain_error("specialization pole");
  return Frac(field.map(f.num()), d);
}

Coef limit_at_one(const Frac& f) {
  int ring = f.ring();
  if (ring == 0) {
    if (!f.num().is_constant() || !f.den().is_constant()) throw std::invalid_argument("limit_at_one expects a u-fraction");
    return Coef(f.num().constant_term() / f.den().constant_term());
  }
  Coef num = f.num(), den = f.den();
  Coef lin = Coef::monomial(ring, 1, 0) - Coef(1);
  while (eval_u_at_one(num).is_zero() && eval_u_at_one(den).is_zero()) {
    if (num.is_zero()) return Coef();
    num = *num.divide_exact(lin);
    den = *den.divide_exact(lin);
  }
  Coef dv = eval_u_at_one(den);
  if (dv.is_zero()) throw std::domain_error("pole at u=1");
  return eval_u_at_one(num) * field_inverse(dv);
}

}  // namespace macfact
