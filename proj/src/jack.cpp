#include "macfact/jack.hpp"

#include <numeric>
#include <stdexcept>

#include "macfact/macdonald.hpp"

namespace macfact {

AlphaParam::AlphaParam(int p_, int r_) : p(p_), r(r_) {
  if (r == 0) throw std::invalid_argument("alpha denominator is zero");
  if (r < 0) {
    p = -p;
    r = -r;
  }
  int g = std::gcd(p, r);
  if (g > 1) {
    p /= g;
    r /= g;
  }
}

AlphaParam AlphaParam::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    int p = std::stoi(s.substr(0, slash), &used);
    if (used != s.substr(0, slash).size()) throw std::invalid_argument("x");
    int r = 1;
    if (slash != std::string::npos) {
      std::string d = s.substr(slash + 1);
      r = std::stoi(d, &used);
      if (used != d.size()) throw std::invalid_argument("x");
    }
    return AlphaParam(p, r);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed alpha: " + s);
  }
}

std::string AlphaParam::str() const { return r == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(r); }

AlphaParam clustering_alpha(int l, int s) {
  if (l < 1 || s < 2) throw std::invalid_argument("clustering parameters out of range");
  if (std::gcd(l + 1, s - 1) != 1)
    throw std::invalid_argument("Jack degeneration needs l+1 and s-1 coprime (l=" + std::to_string(l) +
                                ", s=" + std::to_string(s) + ")");
  return AlphaParam(-(l + 1), s - 1);
}

SpecQT jack_spec(const AlphaParam& alpha) { return SpecQT{alpha.r, -alpha.p, 1, 0}; }

MPoly jack_from_spec(const Composition& lambda, const SpecQT& spec) {
  if (!is_partition(lambda)) throw std::invalid_argument("Jack index must be a partition");
  if (lambda.size() > 8) throw std::invalid_argument("arity overflow: Jack polynomials need N <= 8");
  if (spec.m != 1 || spec.b <= 0) throw std::invalid_argument("Jack limit needs t = u^b, q = u^p");
  Field field = Field::special(spec);
  auto rep = build(lambda, Kind::P, field);
  std::vector<MPoly::Term> out;
  for (const auto& [e, c] : rep->poly.terms()) {
    Coef v;
    try {
      v = limit_at_one(Frac(c, rep->scale));
    } catch (const std::domain_error&) {
      throw std::domain_error("Jack limit singular at x^" +
                              composition_str(exp_vector(e, static_cast<int>(lambda.size()))));
    }
    if (!v.is_zero()) out.emplace_back(e, std::move(v));
  }
  return MPoly::from_terms(rep->poly.vars(), std::move(out));
}

MPoly jack(const Composition& lambda, const AlphaParam& alpha) { return jack_from_spec(lambda, jack_spec(alpha)); }

}  // namespace macfact
