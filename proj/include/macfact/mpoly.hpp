#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "macfact/coeffs.hpp"

namespace macfact {

inline constexpr int kMaxVars = 12;

/// Exponent vector; entries past the variable count stay zero.
using Exp = std::array<std::int16_t, kMaxVars>;

/// Ordered list of distinct variable names.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);
  /// x1, ..., xn.
  static VarSet xs(int n);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  /// Position of `n`, or -1.
  int index(std::string_view n) const;

  friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

/// Sparse Laurent polynomial in a VarSet with Coef coefficients.
/// Terms are sorted ascending (lexicographic on exponent vectors).
class MPoly {
 public:
  using Term = std::pair<Exp, Coef>;

  MPoly() = default;
  explicit MPoly(VarSet vars) : vars_(std::move(vars)) {}
  static MPoly constant(VarSet vars, const Coef& c);
  static MPoly variable(VarSet vars, int i, const Coef& c = Coef(1));
  static MPoly monomial(VarSet vars, const Exp& e, const Coef& c);
  /// Sorts and merges; zero coefficients dropped.
  static MPoly from_terms(VarSet vars, std::vector<Term> terms);

  const VarSet& vars() const { return vars_; }
  int nvars() const { return vars_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutable_terms() { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Lexicographically largest term.
  const Term& leading() const { return terms_.back(); }
  Coef coefficient(const Exp& e) const;
  /// Ring of the (non-constant) coefficients, 0 if all are rational.
  int ring() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly scaled(const Coef& c) const;
  /// Multiply by x^e.
  MPoly shifted(const Exp& e) const;
  MPoly pow(int k) const;

  /// Total degree if homogeneous, nullopt otherwise; throws "undefined degree" on zero.
  std::optional<int> homogeneous_degree() const;
  /// Component of total degree d.
  MPoly degree_part(int d) const;
  int max_degree() const;
  /// Invariant under every transposition of the variables.
  bool is_symmetric() const;
  /// Variable i goes to position perm[i].
  MPoly permuted(const std::vector<int>& perm) const;

  std::string str() const;
  std::string latex() const;

 private:
  VarSet vars_;
  std::vector<Term> terms_;
};

Exp zero_exp();
Exp make_exp(const std::vector<int>& v);
std::vector<int> exp_vector(const Exp& e, int n);
int total_degree(const Exp& e);

/// One alphabet slot: scale * var (var < 0 means the constant letter `scale`).
struct Letter {
  Coef scale = Coef(1);
  int var = -1;
};

/// Letters for the slots x1..xN, with the variable set they live in.
struct EvalAlphabet {
  VarSet target;
  std::vector<Letter> letters;
};

/// Replaces each slot x_i by letters[i].
MPoly substitute(const MPoly& f, const EvalAlphabet& alpha);

/// Value at a point given by one coefficient per variable.
Coef evaluate(const MPoly& f, const std::vector<Coef>& point);

/// Coefficient-wise fraction form f / scale.
struct FracPoly {
  VarSet vars;
  std::vector<std::pair<Exp, Frac>> terms;

  friend bool operator==(const FracPoly& a, const FracPoly& b);
  std::string str() const;
  std::string latex() const;
  nlohmann::json to_json() const;
};

FracPoly to_frac_poly(const MPoly& f, const Coef& scale = Coef(1));

/// Common-denominator form: returns (scaled polynomial, denominator).
std::pair<MPoly, Coef> clear_denominators(const FracPoly& f);

std::string coef_latex(const Coef& c);
std::string frac_latex(const Frac& f);

}  // namespace macfact
