#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "macfact/coeffs.hpp"

namespace macfact {

/// Vector of nonnegative integers; zeros are significant.
using Composition = std::vector<int>;

/// "[2,0,1]", also "[4,2^2,0^2]".
Composition parse_composition(std::string_view text);
std::string composition_str(const Composition& v);

bool is_partition(const Composition& v);
int weight(const Composition& v);
/// Weakly decreasing rearrangement.
Composition sorted_shape(const Composition& v);

/// std_v[i] = #{j : v_j < v_i} + #{j > i : v_j = v_i}.
std::vector<int> standardization(const Composition& v);

struct QMono {
  int qexp = 0;
  int texp = 0;
  friend bool operator==(const QMono&, const QMono&) = default;
};

/// Entries q^{v_i} t^{std_v[i]}.
std::vector<QMono> reciprocal(const Composition& v);
/// Sum of the reciprocal vector, in the generic ring.
Coef reciprocal_sum(const Composition& v);
/// Reciprocal vector entries as points of `field`.
std::vector<Coef> reciprocal_point(const Composition& v, const Field& field);

/// Componentwise partial-sum comparison (non-strict).
bool dominance_leq(const Composition& u, const Composition& v);
/// Strict order used for triangularity: size, then sorted shape, then the vectors.
bool dominance_less(const Composition& u, const Composition& v);

struct QSParams {
  int l = 1;
  int k = 0;
  int s = 2;
  int r = 0;
  int beta = 0;
};

/// [((b+1)s+r)^k, (bs+r)^l, ..., (s+r)^l, 0^{r(l+1)/(s-1)+l}].
Composition quasistaircase(const QSParams& p);
/// Quasistaircase with r = 0.
Composition staircase(int l, int k, int s, int beta);

struct YBStep {
  enum Kind { Transposition, AffinePhi } kind = AffinePhi;
  int i = 0;  // 1-based, transpositions only
  friend bool operator==(const YBStep&, const YBStep&) = default;
};

enum class PathRule {
  /// Peel an affine step whenever the last entry is positive, else the smallest descent.
  AffineFirst,
  /// Smallest descent first; affine step only on weakly increasing vectors.
  DescentFirst,
};

std::vector<YBStep> yb_path(const Composition& v, PathRule rule = PathRule::AffineFirst);
/// Any path to v whose transposition edges avoid `blocked(source, i)`; AffineFirst choices are
/// tried first. nullopt if every path is blocked.
std::optional<std::vector<YBStep>> yb_path_avoiding(const Composition& v,
                                                     const std::function<bool(const Composition&, int)>& blocked);

/// Replays a path from [0^N]; throws if a transposition is applied off an ascent.
Composition replay_path(int n, const std::vector<YBStep>& path);
std::string path_str(const std::vector<YBStep>& path);

/// lambda_i - lambda_{i+l} >= s for all valid i.
bool is_admissible(const Composition& lambda, int l, int s);

/// Partitions mu of length N with mu_i <= lambda_i.
std::vector<Composition> partitions_inside(const Composition& lambda);
/// Partitions of length n and weight at most `max_weight`.
std::vector<Composition> partitions_up_to(int n, int max_weight);
/// Compositions of length n and weight at most `max_weight`.
std::vector<Composition> compositions_up_to(int n, int max_weight);

}  // namespace macfact
