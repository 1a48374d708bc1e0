#include "macfact/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace macfact {

namespace {

struct Parser {
  std::string_view s;
  const VarSet& vars;
  const SymbolTable& symbols;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad expression '" + std::string(s) + "': " + what);
  }

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  MPoly constant(const Coef& c) const { return MPoly::constant(vars, c); }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        acc = acc * invert(unary());
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  int integer() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected an integer exponent");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > 100000) fail("exponent too large");
    }
    return static_cast<int>(neg ? -v : v);
  }

  MPoly power() {
    MPoly base = atom();
    if (!eat('^')) return base;
    int k;
    if (eat('(')) {
      k = integer();
      if (!eat(')')) fail("expected ')'");
    } else {
      k = integer();
    }
    if (k >= 0) return base.pow(k);
    return invert(base).pow(-k);
  }

  MPoly invert(const MPoly& m) {
    if (m.size() != 1 || m.terms()[0].second.size() != 1) fail("can only divide by a monomial");
    const auto& [e, c] = m.terms()[0];
    const Term2& t = c.terms()[0];
    Exp ne{};
    for (int i = 0; i < kMaxVars; ++i) ne[i] = static_cast<std::int16_t>(-e[i]);
    int ring = c.ring();
    int e2 = -t.e2;
    if (ring > 0) e2 = ((e2 % ring) + ring) % ring;
    return MPoly::monomial(vars, ne, Coef::monomial(ring, -t.e1, e2, t.c.inverse()));
  }

  MPoly atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      MPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return constant(Coef(Rational::parse(s.substr(start, pos - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
      std::string_view name = s.substr(start, pos - start);
      int vi = vars.index(name);
      if (vi >= 0) return MPoly::variable(vars, vi);
      if (auto sym = symbols(name)) return constant(*sym);
      fail("unknown symbol " + std::string(name));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

bool mentions(std::string_view text, std::string_view word) {
  for (std::size_t p = text.find(word); p != std::string_view::npos; p = text.find(word, p + 1)) {
    bool left = p == 0 || !(std::isalnum(static_cast<unsigned char>(text[p - 1])) || text[p - 1] == '_');
    std::size_t end = p + word.size();
    bool right = end >= text.size() || !(std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_');
    if (left && right) return true;
  }
  return false;
}

int positive_count(const Rational& c, std::string_view item) {
  if (!c.is_integer() || c.sign() <= 0 || c > Rational(64))
    throw std::invalid_argument("alphabet item '" + std::string(item) + "' is not a sum of letters");
  int n = 0;
  for (Rational k = c; k.sign() > 0; k -= Rational(1)) ++n;
  return n;
}

}  // namespace

SymbolTable ring_symbols(int ring) {
  return [ring](std::string_view name) -> std::optional<Coef> {
    if (ring == 0) {
      if (name == "q") return Coef::monomial(0, 1, 0);
      if (name == "t") return Coef::monomial(0, 0, 1);
    } else {
      if (name == "u") return Coef::monomial(ring, 1, 0);
      if (name == "zeta") return Coef::monomial(ring, 0, 1);
    }
    return std::nullopt;
  };
}

SymbolTable field_symbols(const Field& field) {
  return [field](std::string_view name) -> std::optional<Coef> {
    if (name == "q") return field.q();
    if (name == "t") return field.t();
    if (field.ring() > 0) {
      if (name == "u") return Coef::monomial(field.ring(), 1, 0);
      if (name == "zeta") return Coef::monomial(field.ring(), 0, 1);
    }
    return std::nullopt;
  };
}

MPoly parse_poly(std::string_view text, const VarSet& vars, const SymbolTable& symbols) {
  Parser p{text, vars, symbols};
  MPoly v = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

MPoly parse_poly(std::string_view text, const VarSet& vars, const Field& field) {
  return parse_poly(text, vars, field_symbols(field));
}

Coef parse_coef(std::string_view text, int ring) {
  MPoly v = parse_poly(text, VarSet(), ring_symbols(ring));
  if (v.is_zero()) return Coef::monomial(ring, 0, 0, Rational(0));
  Coef c = v.terms()[0].second;
  if (c.ring() != ring && !c.is_constant()) throw std::invalid_argument("coefficient in the wrong ring: " + std::string(text));
  return c.is_constant() ? Coef::from_terms(ring, c.terms()) : c;
}

std::vector<Letter> parse_letters(std::string_view item, const VarSet& vars, const Field& field) {
  bool raw = field.is_generic() || !(mentions(item, "u") || mentions(item, "zeta"));
  MPoly v = raw ? parse_poly(item, vars, ring_symbols(0)) : parse_poly(item, vars, field);
  std::vector<Letter> out;
  for (const auto& [e, c] : v.terms()) {
    int var = -1;
    for (int i = 0; i < vars.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] != 1 || var >= 0) throw std::invalid_argument("alphabet item '" + std::string(item) + "' is not linear");
      var = i;
    }
    for (const auto& t : c.terms()) {
      int n = positive_count(t.c, item);
      Coef scale = raw ? field.qt(t.e1, t.e2) : Coef::monomial(c.ring(), t.e1, t.e2);
      for (int k = 0; k < n; ++k) out.push_back(Letter{scale, var});
    }
  }
  return out;
}

EvalAlphabet parse_alphabet(const std::vector<std::string>& items, const VarSet& vars, const Field& field) {
  EvalAlphabet a;
  a.target = vars;
  for (const auto& it : items)
    for (auto& l : parse_letters(it, vars, field)) a.letters.push_back(std::move(l));
  return a;
}

FracPoly frac_poly_from_json(const nlohmann::json& j) {
  FracPoly f;
  f.vars = VarSet(j.at("vars").get<std::vector<std::string>>());
  int ring = j.value("ring", 0);
  for (const auto& t : j.at("terms")) {
    auto ev = t.at("exp").get<std::vector<int>>();
    if (static_cast<int>(ev.size()) != f.vars.size()) throw std::invalid_argument("exponent length mismatch");
    Coef num = parse_coef(t.at("num").get<std::string>(), ring);
    Coef den = parse_coef(t.at("den").get<std::string>(), ring);
    f.terms.emplace_back(make_exp(ev), Frac(num, den));
  }
  return f;
}

}  // namespace macfact
