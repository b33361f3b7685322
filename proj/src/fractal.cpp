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

#include "wfk/fractal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "wfk/errors.hpp"
#include "wfk/kernel.hpp"

namespace wfk {

namespace {

struct LineFit {
  double slope = 0.0;
  double rms_residual = 0.0;
};

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (my + fit.slope * (xs[i] - mx));
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / n);
  return fit;
}

std::vector<double> probe_points(std::size_t x_samples, std::uint64_t seed) {
  std::vector<double> xs;
  xs.reserve(x_samples + 129);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  for (std::size_t i = 0; i < x_samples; ++i) xs.push_back(uniform(rng));
  for (int j = -64; j <= 64; ++j) xs.push_back(static_cast<double>(j) / 64.0);
  return xs;
}

// Realized step: (x + h) - x, exact for |h| <= |x| by Sterbenz, and exactly h at x = 0.
double realized_step(double x, double h) { return (x + h) - x; }

}  // namespace

double HolderProbe::tail_quotient_ratio(std::size_t last) const {
  if (max_quotients.size() < last + 1 || last == 0) {
    throw DomainError("not enough scales for the requested quotient ratio");
  }
  const std::size_t end = max_quotients.size() - 1;
  return std::pow(max_quotients[end] / max_quotients[end - last],
                  1.0 / static_cast<double>(last));
}

HolderProbe holder_probe(const Evaluator& f, double base, int m_max, std::size_t x_samples,
                         std::uint64_t seed) {
  if (m_max < 3) throw DomainError("Hoelder probe needs m_max >= 3");
  if (!(base > 1.0)) throw DomainError("Hoelder probe base must be > 1");
  if (static_cast<double>(m_max) * std::log2(base) > 40.0) {
    throw NumericError(fmt::format(
        "base^m_max = {}^{} is beyond the resolvable step range", base, m_max));
  }
  const std::vector<double> xs = probe_points(x_samples, seed);
  std::vector<double> centre(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) centre[i] = f(xs[i]);

  HolderProbe probe;
  probe.seed = seed;
  probe.probe_points = xs.size();
  for (int m = 1; m <= m_max; ++m) {
    const double h = std::pow(base, -m);
    double best_inc = 0.0;
    double best_q = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (double signed_h : {h, -h}) {
        const double step = realized_step(xs[i], signed_h);
        if (step == 0.0) continue;
        const double inc = std::fabs(f(xs[i] + step) - centre[i]);
        best_inc = std::max(best_inc, inc);
        best_q = std::max(best_q, inc / std::fabs(step));
      }
    }
    probe.scales.push_back(m);
    probe.steps.push_back(h);
    probe.max_increments.push_back(best_inc);
    probe.max_quotients.push_back(best_q);
  }
  probe.fit_from = std::max(1, m_max / 2);
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < probe.steps.size(); ++i) {
    if (probe.scales[i] < probe.fit_from || probe.max_increments[i] <= 0.0) continue;
    lx.push_back(std::log(probe.steps[i]));
    ly.push_back(std::log(probe.max_increments[i]));
  }
  if (lx.size() < 2) throw NumericError("probe found no nonzero increments");
  const LineFit fit = fit_line(lx, ly);
  probe.fitted_exponent = fit.slope;
  probe.fit_residual = fit.rms_residual;
  return probe;
}

HolderProbe holder_probe(const KernelParams& params, int m_max, std::size_t x_samples,
                         std::uint64_t seed, double tol) {
  const std::size_t terms = truncation_terms(params, tol);
  return holder_probe(
      [&](double x) { return eval_weierstrass_terms(params, x, terms); },
      static_cast<double>(params.b()), m_max, x_samples, seed);
}

std::vector<QuotientRow> diff_quotient_table(const Evaluator& f, double x, int m_max,
                                             double base) {
  if (m_max < 1) throw DomainError("quotient table needs m_max >= 1");
  if (!(base > 1.0)) throw DomainError("quotient table base must be > 1");
  const double fx = f(x);
  std::vector<QuotientRow> rows;
  for (int m = 1; m <= m_max; ++m) {
    const double h = std::pow(base, -m);
    QuotientRow row;
    row.step = h;
    for (double signed_h : {h, -h}) {
      const double step = realized_step(x, signed_h);
      if (step == 0.0) continue;
      row.max_quotient =
          std::max(row.max_quotient, std::fabs(f(x + step) - fx) / std::fabs(step));
    }
    rows.push_back(row);
  }
  return rows;
}

double graph_dimension_formula(const KernelParams& params) {
  return 2.0 + std::log(params.a()) / std::log(static_cast<double>(params.b()));
}

namespace {

struct BoxGrid {
  int m_min = 0;
  int m_max = 0;
  int r = 0;  // log2(samples per column)
  int p = 0;  // finest spacing 2^-p
  std::size_t points = 0;
};

BoxGrid plan_box_grid(const BoxCountOptions& options) {
  if (options.m_min < 3 || options.m_min >= options.m_max || options.m_max > 14) {
    throw DomainError(fmt::format("box-count window [{}, {}] must satisfy 3 <= m_min < m_max <= 14",
                                  options.m_min, options.m_max));
  }
  if (options.samples_per_column < 4) {
    throw DomainError("box counting needs at least 4 samples per column at the finest scale");
  }
  BoxGrid grid;
  grid.m_min = options.m_min;
  grid.m_max = options.m_max;
  grid.r = static_cast<int>(std::bit_width(std::bit_ceil(options.samples_per_column)) - 1);
  grid.p = grid.m_max + grid.r;
  grid.points = (std::size_t{1} << (grid.p + 1)) + 1;
  if (grid.points > options.max_evaluations) {
    throw DomainError(fmt::format(
        "box counting at depth {} with {} samples per column needs {} evaluations (budget {})",
        grid.m_max, std::size_t{1} << grid.r, grid.points, options.max_evaluations));
  }
  return grid;
}

// Column-range accumulator over all scales, fed with the finest grid in order.
class ColumnRanges {
 public:
  explicit ColumnRanges(const BoxGrid& grid) : grid_(grid) {
    for (int m = grid.m_min; m <= grid.m_max; ++m) {
      const std::size_t columns = std::size_t{1} << (m + 1);
      lo_.emplace_back(columns, std::numeric_limits<double>::infinity());
      hi_.emplace_back(columns, -std::numeric_limits<double>::infinity());
    }
  }

  void add(std::size_t j, double y) {
    for (int m = grid_.m_min; m <= grid_.m_max; ++m) {
      const std::size_t stride = std::size_t{1} << (grid_.m_max - m);
      if (j % stride != 0) continue;  // finer scales use strides that divide coarser ones
      const int column_shift = grid_.p - m;
      const std::size_t column = j >> column_shift;
      auto& lo = lo_[static_cast<std::size_t>(m - grid_.m_min)];
      auto& hi = hi_[static_cast<std::size_t>(m - grid_.m_min)];
      if (column < lo.size()) {
        lo[column] = std::min(lo[column], y);
        hi[column] = std::max(hi[column], y);
      }
      // Column boundaries are shared with the column to the left.
      if (column > 0 && (j & ((std::size_t{1} << column_shift) - 1)) == 0) {
        lo[column - 1] = std::min(lo[column - 1], y);
        hi[column - 1] = std::max(hi[column - 1], y);
      }
    }
  }

  DimensionEstimate finish() const {
    DimensionEstimate est;
    std::vector<double> lx, ly;
    for (int m = grid_.m_min; m <= grid_.m_max; ++m) {
      const auto& lo = lo_[static_cast<std::size_t>(m - grid_.m_min)];
      const auto& hi = hi_[static_cast<std::size_t>(m - grid_.m_min)];
      double count = 0.0;
      for (std::size_t c = 0; c < lo.size(); ++c) {
        count += std::floor(std::ldexp(hi[c], m)) - std::floor(std::ldexp(lo[c], m)) + 1.0;
      }
      est.levels.push_back(m);
      est.scales.push_back(std::ldexp(1.0, -m));
      est.counts.push_back(count);
      lx.push_back(-static_cast<double>(m) * std::numbers::ln2);
      ly.push_back(std::log(count));
    }
    const LineFit fit = fit_line(lx, ly);
    est.slope = fit.slope;
    est.raw_dimension = -fit.slope;
    est.dimension = std::clamp(est.raw_dimension, 1.0, 2.0);
    est.fit_residual = fit.rms_residual;
    est.samples_per_column = std::size_t{1} << grid_.r;
    est.evaluations = grid_.points;
    return est;
  }

 private:
  BoxGrid grid_;
  std::vector<std::vector<double>> lo_, hi_;
};

constexpr std::size_t kChunk = std::size_t{1} << 16;

}  // namespace

DimensionEstimate box_dimension(const KernelParams& params, const BoxCountOptions& options) {
  const BoxGrid grid = plan_box_grid(options);
  ColumnRanges ranges(grid);
  for (std::size_t first = 0; first < grid.points; first += kChunk) {
    const std::size_t last = std::min(grid.points, first + kChunk);
    const std::vector<double> values =
        weierstrass_on_dyadic_grid(params, grid.p, first, last, options.tol);
    for (std::size_t j = first; j < last; ++j) ranges.add(j, values[j - first]);
  }
  return ranges.finish();
}

DimensionEstimate box_dimension(const Evaluator& f, const BoxCountOptions& options) {
  const BoxGrid grid = plan_box_grid(options);
  ColumnRanges ranges(grid);
  for (std::size_t j = 0; j < grid.points; ++j) {
    ranges.add(j, f(-1.0 + std::ldexp(static_cast<double>(j), -grid.p)));
  }
  return ranges.finish();
}

}  // namespace wfk
