#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace macfact {

/// Exact rational number in 16 bytes.
/// Small values keep num/den inline (den > 0); larger ones spill to a heap
/// mpq_class, flagged by den_ == 0 with the pointer stored in num_.
/// Always reduced, denominator positive.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: integer literals convert
  Rational(int n) : num_(n) {}        // NOLINT
  Rational(long n) : num_(n) {}       // NOLINT
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);
  explicit Rational(const mpz_class& z);

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (den_ == 0) copy_big(o);
  }
  Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_) {
    o.num_ = 0;
    o.den_ = 1;
  }
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept;
  ~Rational() {
    if (den_ == 0) release_big();
  }

  /// Parses "7", "-3/4".
  static Rational parse(std::string_view text);

  bool is_zero() const { return den_ == 1 && num_ == 0; }
  bool is_one() const { return den_ == 1 && num_ == 1; }
  bool is_minus_one() const { return den_ == 1 && num_ == -1; }
  bool is_integer() const;
  bool is_small() const { return den_ != 0; }
  int sign() const;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  Rational inverse() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  void negate();

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::size_t hash() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;

  const mpq_class& big() const { return *reinterpret_cast<const mpq_class*>(num_); }
  void release() {
    if (den_ == 0) release_big();
  }
  void release_big();
  void copy_big(const Rational& o);
  void set_small_or_big(__int128 n, __int128 d);
  void set_big(mpq_class q);
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// gcd of two integers given as mpz.
mpz_class gcd(const mpz_class& a, const mpz_class& b);

}  // namespace macfact
