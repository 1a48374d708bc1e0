#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "macfact/combin.hpp"
#include "macfact/mpoly.hpp"

namespace macfact {

/// E: nonsymmetric, M: shifted nonsymmetric, P: symmetric, MS: shifted symmetric.
enum class Kind { E, M, P, MS };

Kind parse_kind(std::string_view s);
std::string kind_str(Kind k);
bool is_symmetric_kind(Kind k);
bool is_shifted_kind(Kind k);

/// Raised when a Yang-Baxter edge coefficient has a vanishing denominator.
struct SingularEdgeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The polynomial is kept as poly / scale, with poly having polynomial coefficients
/// and scale its coefficient at x^index.
struct BuildReport {
  Composition index;
  Kind kind = Kind::E;
  Field field;
  MPoly poly;
  Coef scale;
  std::vector<YBStep> path;
  /// "direct", "alternate-path" (a path avoiding singular edges), "rearranged [v]" (symmetric
  /// kinds built from another rearrangement), "perturbed" or "generic-specialized".
  std::string route = "direct";
  /// Candidate content factors (unused once the content is fully removed).
  std::vector<Coef> hints;

  /// Coefficients divided by scale (monic at x^index).
  FracPoly monic() const { return to_frac_poly(poly, scale); }
};

/// Yang-Baxter construction over `field` along one path; throws "YB edge singular" on a
/// vanishing edge denominator.
BuildReport build_nonsymmetric(const Composition& v, Kind kind, const Field& field,
                               PathRule rule = PathRule::AffineFirst);

/// Same along an explicit path from [0^N].
BuildReport build_along_path(const Composition& v, Kind kind, const Field& field, const std::vector<YBStep>& path);

/// Whether the edge w --s_i--> w.s_i has a vanishing denominator over `field`.
bool edge_singular(const Composition& w, int i, const Field& field);

/// Symmetrizes the nonsymmetric polynomial of a partition.
BuildReport build_symmetric(const Composition& lambda, Kind kind, const Field& field);

/// Memoized builder for any kind. Singular specialized edges fall back to the other path,
/// then to a generic build that is specialized afterwards ("specialization pole" if that fails).
std::shared_ptr<const BuildReport> build(const Composition& v, Kind kind, const Field& field);

/// Builds along the default path with q perturbed to q*(1+eps) and keeps the lowest eps-order
/// part (the value at eps = 0 once the scalar is divided out). Omega must be +-1.
/// Throws "specialization pole" when the target has a pole there.
BuildReport perturbed_build(const Composition& v, Kind kind, const Field& field);

/// Specializes a generic build.
BuildReport specialize_build(const BuildReport& generic, const Field& field);

void clear_cache();
std::size_t cache_size();

struct VanishingReport {
  std::vector<Composition> points;
  std::vector<Composition> violations;
  bool nonzero_at_index = false;
  bool pass() const { return violations.empty() && nonzero_at_index; }
};

/// M_v (resp. MS_mu) at every reciprocal vector of a smaller-or-equal-weight index.
VanishingReport vanishing_check(const Composition& target, Kind kind, const Field& field = Field(),
                                int budget = 200);

struct SpectralReport {
  /// Observed eigenvalue per index (nullopt if not an eigenfunction there).
  std::vector<std::optional<Frac>> eigenvalues;
  std::vector<Frac> expected;
  bool pass() const;
};

/// xi_i (kind E) or Xi_i (kind M) against 1/<v>[i].
SpectralReport spectral_check(const Composition& v, Kind kind, const Field& field = Field());

/// Reduces content: rational content, monomial content, then trial division by candidates.
/// Repeated candidates stand for multiplicity; those not removed are returned.
std::vector<Coef> remove_content(MPoly& f, std::vector<Coef> candidates);

/// Divides by each candidate as often as it goes.
void remove_content_exhaustively(MPoly& f, std::vector<Coef> candidates);

/// Over a specialized ring, divides f by the gcd of all its coefficients. Over the generic ring
/// only rational and monomial content is removed.
void remove_full_content(MPoly& f);

}  // namespace macfact
