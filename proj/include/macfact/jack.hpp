#pragma once

#include <string>
#include <string_view>

#include "macfact/combin.hpp"
#include "macfact/mpoly.hpp"

namespace macfact {

/// alpha = p/r in lowest terms, r > 0.
struct AlphaParam {
  int p = 1;
  int r = 1;

  AlphaParam() = default;
  AlphaParam(int p_, int r_);
  /// "2", "-3/2".
  static AlphaParam parse(std::string_view text);
  std::string str() const;
  friend bool operator==(const AlphaParam&, const AlphaParam&) = default;
};

/// alpha = -(l+1)/(s-1); l+1 and s-1 must be coprime.
AlphaParam clustering_alpha(int l, int s);

/// t = u^r, q = u^p.
SpecQT jack_spec(const AlphaParam& alpha);

/// Monic Jack polynomial in x1..xN (N = lambda.size() <= 8): P_lambda at t = u^r, q = u^p,
/// then u -> 1 coefficientwise. Throws "Jack limit singular" on a pole at u = 1.
MPoly jack(const Composition& lambda, const AlphaParam& alpha);

/// Same through any specialization with m = 1 and q a power of t.
MPoly jack_from_spec(const Composition& lambda, const SpecQT& spec);

}  // namespace macfact
