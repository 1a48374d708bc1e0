#pragma once

#include <random>
#include <vector>

#include "macfact/mpoly.hpp"

namespace macfact::support {

/// Random polynomial in x1..xn with small integer coefficients times q^a t^b.
inline MPoly random_poly(std::mt19937_64& rng, int n, int terms = 4, int max_deg = 3) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-3, 3), qt(-1, 2);
  VarSet vars = VarSet::xs(n);
  std::vector<MPoly::Term> ts;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(n);
    for (int& x : e) x = deg(rng);
    int c = coef(rng);
    if (c == 0) c = 1;
    ts.emplace_back(make_exp(e), Coef::monomial(0, qt(rng), qt(rng), Rational(c)));
  }
  return MPoly::from_terms(vars, ts);
}

/// Random Laurent polynomial in q and t.
inline Coef random_coef(std::mt19937_64& rng, int terms = 3) {
  std::uniform_int_distribution<int> e(-3, 3), c(-5, 5);
  std::vector<Term2> ts;
  for (int k = 0; k < terms; ++k) ts.push_back(Term2{e(rng), e(rng), Rational(c(rng))});
  return Coef::from_terms(0, ts);
}

}  // namespace macfact::support
