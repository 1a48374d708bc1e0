#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "macfact/combin.hpp"
#include "macfact/mpoly.hpp"

namespace macfact {

enum class Mode { Exact, UpToScalar, UpToQTMonomial };

Mode parse_mode(std::string_view s);
std::string mode_str(Mode m);

struct CheckReport {
  bool pass = false;
  /// lhs / rhs when both sides are nonzero and share the leading monomial.
  std::optional<Frac> scalar;
  bool is_qt_monomial = false;
  /// Monomials where lhs and scalar * rhs differ (at most a few), or other failing points.
  std::vector<std::string> witnesses;
  std::string note;
};

/// Compares P / p_scale with Q / q_scale.
CheckReport proportional(const MPoly& P, const MPoly& Q, Mode mode, const Coef& p_scale = Coef(1),
                         const Coef& q_scale = Coef(1));

/// Tuples (a_1..a_{l+1}) in {0..s-1} with t^(l+1) q^(a_1+...+a_{l+1}) = 1 under spec.
std::vector<std::vector<int>> wheel_tuples(int l, int s, const SpecQT& spec);

/// P vanishes once x_{j+1} = t q^{a_j} x_j for j <= l, for every wheel tuple.
CheckReport wheel_check(const MPoly& P, int l, int s, const SpecQT& spec);

/// Product of (x - y) over the letters x of X and y of Y.
MPoly resultant(const std::vector<Letter>& X, const std::vector<Letter>& Y, const VarSet& vars);

/// ratio^0 * x, ..., ratio^(n-1) * x for the variable x (var < 0: constants).
std::vector<Letter> geometric(const Coef& ratio, int n, int var, const Coef& start = Coef(1));

/// Entries of the reciprocal vector of a composition, as constant letters.
std::vector<Letter> reciprocal_letters(const Composition& v, const Field& field);

/// floor(lambda)_j: number of parts (zeros included) at most j.
int parts_at_most(const Composition& lambda, int j);

/// Product over j < max(lambda), i <= m_lambda of (x_i - q^j t^{floor(lambda)_j}).
MPoly principal_product(const Composition& lambda, const Field& field);

/// One step of the saturated / standard reduction of MS_lambda(c X_m + [[tail]]).
struct ChainStep {
  std::string rule;  // "saturated" or "standard"
  Composition index;  // index after the step
  QMono scale;        // c = q^a t^b after the step
};

struct PrincipalChain {
  std::vector<ChainStep> steps;
  /// Product of the factors produced along the way, in x1..x_m.
  MPoly product;
  /// Closed-form product for the starting partition.
  MPoly expected;
};

/// Reduces MS_lambda(X_m + [[tail]]) to a constant by the two reduction rules alone.
PrincipalChain principal_chain(const Composition& lambda);

/// A named corpus entry; `data` holds the family parameters and recipes.
struct IdentityCase {
  std::string name;
  std::string family;
  std::string description;
  /// Left out of full runs unless asked for.
  bool slow = false;
  nlohmann::json data;
};

/// A run marked "expect": "fail" succeeds when at least one of its checks fails.
struct NamedCheck {
  std::string label;
  CheckReport report;
  bool expect_pass = true;
  bool ok() const { return report.pass == expect_pass; }
};

struct CaseReport {
  std::string name;
  bool pass = false;
  /// Set when a build or parse failed; the case then counts as an error, not a failure.
  std::string error;
  std::vector<NamedCheck> checks;
  double millis = 0;

  /// {name, verdict, scalar, millis, checks}.
  nlohmann::json to_json() const;
};

std::vector<IdentityCase> parse_corpus(const nlohmann::json& j);
std::vector<IdentityCase> load_corpus(const std::string& path);
/// Corpus shipped with the sources.
std::string default_corpus_path();

/// Families known to run_case.
std::vector<std::string> family_names();

/// "l=2,k=1,spec=t=u;q=u^-3" into a JSON object; integer values become numbers.
nlohmann::json parse_params(std::string_view text);

/// Runs one case. `overrides` replaces the case parameters (and drops its grid); `seed` drives
/// randomized families.
CaseReport run_case(const IdentityCase& c, const nlohmann::json& overrides = nullptr, std::uint64_t seed = 1);

}  // namespace macfact
