#include "macfact/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace macfact {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t gcd64(std::uint64_t x, std::uint64_t y) {
  while (y != 0) {
    std::uint64_t r = x % y;
    x = y;
    y = r;
  }
  return x;
}

std::uint64_t uabs64(std::int64_t v) {
  return v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v > kMin64 && v <= kMax64; }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  if (neg) r = -r;
  return r;
}

}  // namespace

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("division by zero");
  set_small_or_big(n, d);
}

Rational::Rational(const mpq_class& q) { set_big(q); }

Rational::Rational(const mpz_class& z) { set_big(mpq_class(z)); }

void Rational::copy_big(const Rational& o) { num_ = reinterpret_cast<std::int64_t>(new mpq_class(o.big())); }

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  if (o.den_ == 0) {
    auto* p = new mpq_class(o.big());
    release();
    num_ = reinterpret_cast<std::int64_t>(p);
    den_ = 0;
  } else {
    release();
    num_ = o.num_;
    den_ = o.den_;
  }
  return *this;
}

Rational& Rational::operator=(Rational&& o) noexcept {
  if (this == &o) return *this;
  release();
  num_ = o.num_;
  den_ = o.den_;
  o.num_ = 0;
  o.den_ = 1;
  return *this;
}

void Rational::release_big() {
  delete reinterpret_cast<mpq_class*>(num_);
  num_ = 0;
  den_ = 1;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string n(text.substr(0, slash));
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  mpz_class num;
  if (n.empty() || num.set_str(n, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(text));
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    std::string d(text.substr(slash + 1));
    if (d.empty() || den.set_str(d, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(text));
    if (den == 0) throw std::domain_error("division by zero");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

void Rational::set_small_or_big(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    release();
    num_ = 0;
    den_ = 1;
    return;
  }
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits(n) && fits(d)) {
    release();
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    set_big(mpq_class(to_mpz(n), to_mpz(d)));
  }
}

void Rational::set_big(mpq_class q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n != std::numeric_limits<long>::min()) {
    long nn = n.get_si();
    long dd = d.get_si();
    release();
    num_ = nn;
    den_ = dd;
    return;
  }
  auto* p = new mpq_class(std::move(q));
  release();
  num_ = reinterpret_cast<std::int64_t>(p);
  den_ = 0;
}

bool Rational::is_integer() const { return den_ == 0 ? big().get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (den_ == 0) return sgn(big());
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  return den_ == 0 ? mpz_class(big().get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return den_ == 0 ? mpz_class(big().get_den()) : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (den_ == 0) return big();
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (den_ == 0) return Rational(mpq_class(1) / big());
  Rational r;
  r.set_small_or_big(den_, num_);
  return r;
}

std::string Rational::str() const {
  if (den_ == 0) return big().get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

void Rational::negate() {
  if (den_ == 0) {
    auto* p = reinterpret_cast<mpq_class*>(num_);
    *p = -*p;
  } else {
    num_ = -num_;
  }
}

Rational Rational::operator-() const {
  Rational r(*this);
  r.negate();
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    std::int64_t s;
    if (!__builtin_add_overflow(num_, o.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
      num_ = s;
      return *this;
    }
    set_small_or_big(static_cast<i128>(num_) + o.num_, 1);
    return *this;
  }
  if (den_ != 0 && o.den_ != 0) {
    i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
    i128 d = static_cast<i128>(den_) * o.den_;
    if (uabs(n) < (static_cast<u128>(1) << 126) && d < (static_cast<i128>(1) << 126)) {
      set_small_or_big(n, d);
      return *this;
    }
  }
  set_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    std::int64_t s;
    if (!__builtin_sub_overflow(num_, o.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
      num_ = s;
      return *this;
    }
    set_small_or_big(static_cast<i128>(num_) - o.num_, 1);
    return *this;
  }
  if (den_ != 0 && o.den_ != 0) {
    i128 n = static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_;
    i128 d = static_cast<i128>(den_) * o.den_;
    set_small_or_big(n, d);
    return *this;
  }
  set_big(to_mpq() - o.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    std::int64_t p;
    if (!__builtin_mul_overflow(num_, o.num_, &p) && p != std::numeric_limits<std::int64_t>::min()) {
      num_ = p;
      return *this;
    }
    set_small_or_big(static_cast<i128>(num_) * o.num_, 1);
    return *this;
  }
  if (den_ != 0 && o.den_ != 0) {
    std::uint64_t g1 = gcd64(uabs64(num_), static_cast<std::uint64_t>(o.den_));
    std::uint64_t g2 = gcd64(uabs64(o.num_), static_cast<std::uint64_t>(den_));
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) * (o.num_ / static_cast<std::int64_t>(g2));
    i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) * (o.den_ / static_cast<std::int64_t>(g1));
    set_small_or_big(n, d);
    return *this;
  }
  set_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return *this *= o.inverse();
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.den_ == 0 && b.den_ == 0) return a.big() == b.big();
  return false;  // canonical forms: a spilled value never fits inline
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::size_t Rational::hash() const {
  if (den_ == 0) return std::hash<std::string>{}(big().get_str());
  return std::hash<std::int64_t>{}(num_) * 1000003u ^ std::hash<std::int64_t>{}(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace macfact
