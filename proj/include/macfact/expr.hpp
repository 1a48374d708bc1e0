#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "macfact/mpoly.hpp"

namespace macfact {

/// Maps a symbol name to a coefficient, or nullopt if unknown.
using SymbolTable = std::function<std::optional<Coef>(std::string_view)>;

/// Symbols of a field: q and t, plus u and zeta once specialized.
SymbolTable field_symbols(const Field& field);
/// Raw symbols of a Coef ring: q, t for ring 0; u, zeta for ring m.
SymbolTable ring_symbols(int ring);

/// Polynomial expression over `vars`: numbers like 3 or 2/5, symbols, variables,
/// + - * parentheses, ^ with integer exponents (negative only on monomials) and
/// division by a monomial.
MPoly parse_poly(std::string_view text, const VarSet& vars, const SymbolTable& symbols);
MPoly parse_poly(std::string_view text, const VarSet& vars, const Field& field);

/// A coefficient written with the raw symbols of `ring`.
Coef parse_coef(std::string_view text, int ring);

/// Expands one alphabet item into letters. The item is a sum of letters with nonnegative
/// integer multiplicities: "t^2*y0", "(1+t+t^2)*y1" (three letters), "3*Z", "1+t".
/// Written with q and t, each monomial is specialized separately, so q*y stays one letter
/// even when q = -u^-a.
std::vector<Letter> parse_letters(std::string_view item, const VarSet& vars, const Field& field);

/// Concatenated letters of several items.
EvalAlphabet parse_alphabet(const std::vector<std::string>& items, const VarSet& vars, const Field& field);

/// FracPoly from the form written by FracPoly::to_json.
FracPoly frac_poly_from_json(const nlohmann::json& j);

}  // namespace macfact
