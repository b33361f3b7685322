/*
 * Copyright 2026 The wfk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WFK_COVERING_HPP
#define WFK_COVERING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wfk/params.hpp"
#include "wfk/rkhs.hpp"

namespace wfk {

/// mu_N = (a^N / (1 - a))^{1/2}, the norm of the embedding restricted to pairs n >= N.
double mu(const KernelParams& params, std::size_t terms);

/**
 * The unique N >= 1 with mu_N <= eps < mu_{N-1}.
 * Throws DomainError unless 0 < eps < mu_0 (for eps >= mu_0 one ball suffices).
 */
std::size_t scale_index(const KernelParams& params, double eps);

/// rank * ln(1 + 2 op_norm / eps): log of the volumetric count for a finite-rank operator.
double finite_rank_log_count(double op_norm, std::size_t rank, double eps);

/// finite_rank_log_count, except 0 when op_norm <= eps (a single ball covers).
double finite_rank_log_bound(double op_norm, std::size_t rank, double eps);

/**
 * Constructive bound on ln C(2 eps, I_W):
 *   2 N(eps) * ln(1 + (2/eps) (1/(1-a))^{1/2}),
 * counting N cosine and N sine directions in the low-pass space.
 * Returns 0 for eps >= mu_0.
 */
double upper_bound_log(const KernelParams& params, double eps);

/// How the lower bound treats det(T_n^* T_n).
enum class DeterminantConvention {
  Unit,         // det = 1
  ScaledBasis,  // det = prod over the n basis functions of a^{frequency index}
};

/// n_{eps,a} = ln(eps^2 (1 - a)) / ln a.
double lower_bound_dimension(const KernelParams& params, double eps);

/**
 * Lower bound ceil(n_{eps,a}) * ln(1/eps) + (1/2) ln det, on ln C(eps, I_W).
 * Throws DomainError if n_{eps,a} < 1.
 */
double lower_bound_log(const KernelParams& params, double eps,
                       DeterminantConvention convention = DeterminantConvention::Unit);

/// [ln(1/(eps (1-a)^{1/2}))]^2 / ln(1/a), the sharp growth rate of ln C(eps, I_W).
double entropy_normalizer(const KernelParams& params, double eps);

/**
 * count points uniform in the unit ball of span{first `pairs` basis pairs},
 * flattened as rows (c_0, d_0, c_1, d_1, ...) of width 2 * pairs.
 */
struct BallSamples {
  std::size_t pairs = 0;
  std::vector<double> coeffs;

  std::size_t size() const { return pairs == 0 ? 0 : coeffs.size() / (2 * pairs); }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(coeffs).subspan(i * 2 * pairs, 2 * pairs);
  }
};

/// Deterministic for a fixed seed: isotropic direction times radius u^{1/(2N)}.
BallSamples sample_unit_ball_flat(const KernelParams& params, std::size_t pairs,
                                  std::size_t count, std::uint64_t seed);

std::vector<RkhsFunction> sample_unit_ball(const KernelParams& params, std::size_t pairs,
                                           std::size_t count, std::uint64_t seed);

/// Builds an RkhsFunction from an interleaved coefficient row.
RkhsFunction function_from_row(const KernelParams& params, std::span<const double> row);

/// Default number of equispaced points used for sup-norm distances.
inline constexpr std::size_t kDefaultGridSize = 4096;

/// The equispaced grid x_j = -1 + 2j/G, j < G (x = 1 coincides with -1 by periodicity).
std::vector<double> sup_grid(std::size_t grid_size);

/// max_j |f(x_j) - g(x_j)| over sup_grid(grid_size), by direct evaluation.
double grid_sup_distance(const RkhsFunction& f, const RkhsFunction& g,
                         std::size_t grid_size);

struct PackingResult {
  double eps = 0.0;
  double separation = 0.0;
  std::size_t pairs = 0;
  std::size_t grid_size = 0;
  BallSamples centers;  // rows are the retained sample coefficients
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::size_t samples_used = 0;

  RkhsFunction center(const KernelParams& params, std::size_t i) const {
    return function_from_row(params, centers.row(i));
  }
};

/**
 * Greedy 2 eps-separated subset of sample_unit_ball_flat(pairs, sample_budget,
 * seed): samples are visited in index order, starting with the first, and kept
 * when their grid sup-distance to every kept center is >= 2 eps.
 *
 * ln(count) is a certified lower bound for the packing number of the sampled
 * ball in the grid metric.
 */
PackingResult greedy_packing(const KernelParams& params, double eps, std::size_t pairs,
                             std::size_t grid_size, std::size_t sample_budget,
                             std::uint64_t seed);

struct CoverResult {
  double eps = 0.0;
  std::size_t count = 0;
  double log_count = 0.0;
  std::size_t samples_used = 0;
  std::uint64_t seed = 0;
};

/// Greedy eps-cover of the same sample set: a sample becomes a center when no
/// existing center lies within eps of it.
CoverResult greedy_cover(const KernelParams& params, double eps, std::size_t pairs,
                         std::size_t grid_size, std::size_t sample_budget,
                         std::uint64_t seed);

/// Smallest pairwise grid distance among the packing centers, recomputed
/// from scratch by direct evaluation. +inf for fewer than two centers.
double min_pairwise_distance(const KernelParams& params, const PackingResult& packing);

/// Rank of the finite-dimensional ball used for the empirical columns.
struct RankRule {
  enum class Kind { ScaleIndex, Fixed };
  Kind kind = Kind::ScaleIndex;
  std::size_t fixed_pairs = 0;

  std::size_t pairs_for(const KernelParams& params, double eps) const;
};

struct EmpiricalBudget {
  std::size_t sample_budget = 0;  // 0 disables every empirical column
  std::size_t grid_size = kDefaultGridSize;
  bool packing = true;
  bool cover = true;
};

struct CurveRow {
  double eps = 0.0;
  std::size_t scale_index = 0;
  double log_lower = 0.0;
  double log_upper = 0.0;
  std::optional<double> log_pack;
  std::optional<double> log_cover;
  std::optional<double> ratio;
  std::size_t pairs = 0;   // rank/2 of the sampled ball
  double tail_norm = 0.0;  // mu_{pairs}: what the finite-rank ball leaves out
};

struct CoveringCurve {
  std::vector<CurveRow> rows;
  std::uint64_t seed = 0;
};

/// Default eps grid for covering experiments.
inline const std::vector<double> kDefaultEpsList{0.4, 0.3, 0.2, 0.15, 0.1};

/**
 * One row per eps (strictly decreasing, all < mu_0): scale index, both
 * theoretical bounds, optional packing (separation 2 eps) and cover columns,
 * and ratio = log_pack * ln(1/a) / [ln(1/(eps (1-a)^{1/2}))]^2.
 */
CoveringCurve covering_curve(const KernelParams& params, std::span<const double> eps_list,
                             const RankRule& rank_rule, const EmpiricalBudget& budget,
                             std::uint64_t seed);

struct RatioCheck {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::vector<double> eps;
  std::vector<double> normalized_lower;
  std::vector<double> normalized_upper;
  /// (max - min)/min of the normalized upper curve over [eps_lo, 10 eps_lo].
  double upper_variation_last_decade = 0.0;
};

/// Both bounds divided by entropy_normalizer on a geometric grid from eps_hi
/// down to eps_lo with `steps` points.
RatioCheck asymptotic_ratio_check(const KernelParams& params, double eps_lo, double eps_hi,
                                  std::size_t steps);

}  // namespace wfk

#endif  // WFK_COVERING_HPP
