#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "macfact/rational.hpp"

namespace macfact {

/// Euler totient.
int euler_phi(int m);

/// Dense coefficients (ascending) of the m-th cyclotomic polynomial.
const std::vector<Rational>& cyclotomic_poly(int m);

/// Dense ascending coefficients of z^j mod Phi_m(z), for 0 <= j < m.
const std::vector<Rational>& cyclotomic_power(int m, int j);

struct Term2 {
  std::int32_t e1 = 0;
  std::int32_t e2 = 0;
  Rational c;
};

/// Sparse Laurent polynomial over Q in two symbols.
///
/// ring() == 0: the generic ring Q[q^+-, t^+-]; e1 is the q-exponent, e2 the t-exponent.
/// ring() == m >= 1: Q(zeta_m)[u^+-]; e1 is the u-exponent, e2 the zeta-exponent,
/// kept reduced modulo Phi_m so 0 <= e2 < phi(m).
///
/// Constants are compatible with every ring.
class Coef {
 public:
  Coef() = default;
  Coef(const Rational& r);  // NOLINT
  Coef(int n) : Coef(Rational(n)) {}  // NOLINT

  static Coef monomial(int ring, int e1, int e2, const Rational& c = Rational(1));
  static Coef from_terms(int ring, std::vector<Term2> terms);

  int ring() const { return ring_; }
  const std::vector<Term2>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Single term c*e1^a*e2^b.
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_term() const;
  const Term2& leading() const { return terms_.back(); }

  Coef operator-() const;
  Coef& operator+=(const Coef& o);
  Coef& operator-=(const Coef& o);
  Coef& operator*=(const Coef& o);
  friend Coef operator+(Coef a, const Coef& b) { return a += b; }
  friend Coef operator-(Coef a, const Coef& b) { return a -= b; }
  friend Coef operator*(const Coef& a, const Coef& b);

  Coef scaled(const Rational& r) const;
  /// Multiply by the monomial e1^d1 e2^d2.
  Coef shifted(int d1, int d2) const;
  void shift_inplace(int d1, int d2);
  /// this += sign * other * e1^d1 e2^d2, in place.
  void add_shifted(const Coef& other, int d1, int d2, bool negate);

  friend bool operator==(const Coef& a, const Coef& b);

  int min_e1() const;
  int max_e1() const;
  int min_e2() const;
  int max_e2() const;

  /// Exact quotient if `d` divides this in the Laurent ring.
  std::optional<Coef> divide_exact(const Coef& d) const;

  /// Positive rational c with this/c having coprime integer coefficients and positive leading term.
  Rational content() const;
  /// Returns this/content().
  Coef primitive() const;

  /// Human-readable form, e.g. "q^2*t - 3/2*t^-1" or "u^3 + zeta*u".
  std::string str() const;

  std::size_t hash() const;

  /// Ring compatible with both operands, or throws.
  static int join(const Coef& a, const Coef& b);

 private:
  std::vector<Term2> terms_;  // sorted by (e1, e2), no zero coefficients
  int ring_ = 0;

  void canonicalize();  // reduce, sort, merge
  friend Coef gcd(const Coef& a, const Coef& b);
};

/// Normalized gcd in the Laurent ring: no monomial factor, primitive integer
/// coefficients, positive leading term. gcd(0, 0) = 0.
Coef gcd(const Coef& a, const Coef& b);

/// Substitute e1 -> 1 in a cyclotomic-ring element (value of the u-polynomial at u = 1).
/// Returns coefficients in Q(zeta_m) as a Coef with e1 = 0.
Coef eval_u_at_one(const Coef& c);

/// Coefficient of the top u-power, as an element of Q(zeta_m) (e1 = 0).
Coef top_coefficient(const Coef& c);

/// Inverse of a nonzero element of Q(zeta_m) given with e1 = 0.
Coef field_inverse(const Coef& k);

}  // namespace macfact
