#pragma once

#include <string>
#include <string_view>

#include "macfact/coef.hpp"

namespace macfact {

/// t = u^b, q = zeta_m^e * u^(-a).  `a` may be negative (q a positive power of u).
struct SpecQT {
  int b = 1;
  int a = 0;
  int m = 1;
  int e = 0;

  /// Parses "t=u^B; q=zeta(M,E)*u^-A" and a few shorthands ("q=u^-2", "q=-u^-2", "q=u").
  static SpecQT parse(std::string_view text);
  /// (t,q) = (u^((s-1)/g), omega*u^(-(l+1)/g)), g = gcd(l+1, s-1), omega = zeta_(2g)^e ... with
  /// omega^((s-1)/g) a primitive g-th root of unity; `choice` picks among the admissible omegas.
  static SpecQT admissible(int l, int s, int choice = 0);

  /// Reduces (m, e) so zeta_m^e is a primitive m-th root.
  SpecQT canonical() const;
  std::string str() const;
  friend bool operator==(const SpecQT& x, const SpecQT& y) = default;
};

/// Coefficient field: generic (q,t) or specialized through a SpecQT.
class Field {
 public:
  Field() = default;
  static Field generic() { return Field(); }
  static Field special(const SpecQT& s);
  /// q = omega*u^-a*(1+eps), t = u^b over Q[u^+-][eps]/(eps^order), carried in ring 0 with
  /// e1 = eps exponent and e2 = u exponent. Needs omega rational (m = 1 or 2).
  static Field perturbed(const SpecQT& s, int order);

  bool is_generic() const { return !special_; }
  bool is_perturbed() const { return order_ > 0; }
  int order() const { return order_; }
  int ring() const { return special_ && !order_ ? spec_.m : 0; }
  /// The unperturbed specialization.
  Field base() const { return special(spec_); }
  /// Drops eps powers at or above the order (identity unless perturbed).
  Coef truncate(const Coef& c) const;
  const SpecQT& spec() const { return spec_; }

  /// Image of q^A t^B (times c).
  Coef qt(int A, int B, const Rational& c = Rational(1)) const;
  Coef q() const { return qt(1, 0); }
  Coef t() const { return qt(0, 1); }
  /// Exponent shift realizing multiplication by t (t is always a monomial).
  std::pair<int, int> t_shift() const;

  /// Maps a generic-ring element into this field.
  Coef map(const Coef& generic) const;

  std::string str() const;
  friend bool operator==(const Field& x, const Field& y) {
    return x.special_ == y.special_ && x.order_ == y.order_ && (!x.special_ || x.spec_ == y.spec_);
  }

 private:
  bool special_ = false;
  int order_ = 0;
  SpecQT spec_;
};

/// Element of the fraction field of a Coef ring: num/den, kept normalized.
/// Generic ring: den primitive over Z with positive leading term and no monomial factor.
/// Cyclotomic ring: den monic in u with no power of u.
class Frac {
 public:
  Frac() : den_(1) {}
  Frac(const Coef& n) : num_(n), den_(1) {}  // NOLINT
  Frac(const Rational& r) : num_(r), den_(1) {}  // NOLINT
  Frac(int n) : num_(n), den_(1) {}  // NOLINT
  Frac(const Coef& n, const Coef& d);

  const Coef& num() const { return num_; }
  const Coef& den() const { return den_; }
  int ring() const { return Coef::join(num_, den_); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// Nonzero rational times a monomial in the two symbols (times a power of zeta).
  bool is_monomial() const;

  Frac operator-() const;
  friend Frac operator+(const Frac& a, const Frac& b);
  friend Frac operator-(const Frac& a, const Frac& b);
  friend Frac operator*(const Frac& a, const Frac& b);
  friend Frac operator/(const Frac& a, const Frac& b);
  friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  Frac inverse() const;
  std::string str() const;

 private:
  Coef num_, den_;
  void normalize();
};

/// Substitutes t, q by their images; throws "specialization pole" if the denominator vanishes.
Frac specialize(const Frac& f, const Field& field);

/// lim_{u -> 1} of a cyclotomic-ring fraction, as an element of Q(zeta_m) (e1 = 0).
/// Throws "pole at u=1".
Coef limit_at_one(const Frac& f);

}  // namespace macfact
