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

#ifndef WFK_FRACTAL_HPP
#define WFK_FRACTAL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "wfk/params.hpp"

namespace wfk {

using Evaluator = std::function<double(double)>;

/// Per-scale increments of a function at steps h = base^-m, m = 1..m_max.
struct HolderProbe {
  std::vector<int> scales;
  std::vector<double> steps;
  std::vector<double> max_increments;  // max |f(x +- h) - f(x)|
  std::vector<double> max_quotients;   // max |f(x +- h) - f(x)| / h
  int fit_from = 1;                    // fit uses scales m >= fit_from
  double fitted_exponent = 0.0;        // slope of ln(max increment) against ln h
  double fit_residual = 0.0;           // RMS residual of that fit
  std::uint64_t seed = 0;
  std::size_t probe_points = 0;

  /// Geometric mean of consecutive max-quotient ratios over the last `last` scales.
  double tail_quotient_ratio(std::size_t last = 3) const;
};

/// Quotient ratio above which the probe reports divergence (ab > 1).
inline constexpr double kDivergentRatio = 1.1;
/// Quotient ratio below which the probe reports a differentiable function.
inline constexpr double kSmoothRatio = 1.05;

/**
 * Hoelder-exponent probe: at each scale maximizes the increment over
 * x_samples uniform points of I and the dyadic rationals j/64 in I. The
 * exponent is fitted on the finer half of the scales, m >= m_max/2.
 * Requires m_max >= 3; throws NumericError when base^m_max leaves the range
 * where x + h is resolved in double precision.
 */
HolderProbe holder_probe(const Evaluator& f, double base, int m_max,
                         std::size_t x_samples = 256, std::uint64_t seed = 0);

/// Probe of w_{a,b} itself; the target exponent is params.holder_exponent().
HolderProbe holder_probe(const KernelParams& params, int m_max,
                         std::size_t x_samples = 256, std::uint64_t seed = 0,
                         double tol = kDefaultTol);

struct QuotientRow {
  double step = 0.0;
  double max_quotient = 0.0;
};

/// max(|f(x+h) - f(x)|, |f(x-h) - f(x)|)/h at h = base^-m, m = 1..m_max.
/// h is the step actually realized in floating point.
std::vector<QuotientRow> diff_quotient_table(const Evaluator& f, double x, int m_max,
                                             double base);

struct BoxCountOptions {
  int m_min = 5;
  int m_max = 12;
  std::size_t samples_per_column = 2048;  // rounded up to a power of two
  std::size_t max_evaluations = 20'000'000;
  double tol = 1e-6;  // series truncation, far below the finest box height
};

/// Box-counting estimate for the graph {(x, f(x)) : x in I} on dyadic grids.
struct DimensionEstimate {
  std::vector<int> levels;     // m
  std::vector<double> scales;  // box side 2^-m
  std::vector<double> counts;  // occupied boxes
  double slope = 0.0;          // fitted slope of ln(count) against ln(scale)
  double raw_dimension = 0.0;  // -slope
  double dimension = 0.0;      // -slope clamped to [1, 2]
  double fit_residual = 0.0;   // RMS residual of the fit
  std::size_t samples_per_column = 0;
  std::size_t evaluations = 0;
};

/**
 * Column-wise range counting: every column of width 2^-m is sampled at
 * samples_per_column + 1 equispaced points (the same count at every scale),
 * and contributes floor(max/2^-m) - floor(min/2^-m) + 1 boxes. The slope is
 * fitted over m in [m_min, m_max].
 *
 * Requires 3 <= m_min < m_max <= 14 and samples_per_column >= 4; throws
 * DomainError when the grid would exceed max_evaluations.
 */
DimensionEstimate box_dimension(const KernelParams& params, const BoxCountOptions& options);
DimensionEstimate box_dimension(const Evaluator& f, const BoxCountOptions& options);

inline DimensionEstimate box_dimension(const KernelParams& params, int m_min, int m_max,
                                       std::size_t samples_per_column) {
  BoxCountOptions options;
  options.m_min = m_min;
  options.m_max = m_max;
  options.samples_per_column = samples_per_column;
  return box_dimension(params, options);
}

/// 2 + ln(a)/ln(b).
double graph_dimension_formula(const KernelParams& params);

}  // namespace wfk

#endif  // WFK_FRACTAL_HPP
