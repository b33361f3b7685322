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

#include "wfk/covering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include <fmt/format.h>

#include "wfk/errors.hpp"
#include "wfk/phase.hpp"

namespace wfk {

double mu(const KernelParams& params, std::size_t terms) {
  return highpass_norm(params, terms);
}

std::size_t scale_index(const KernelParams& params, double eps) {
  const double mu0 = mu(params, 0);
  if (!(eps > 0.0) || eps >= mu0) {
    throw DomainError(fmt::format("scale index needs 0 < eps < mu_0 = {}, got {}", mu0, eps));
  }
  std::size_t n = 1;
  while (mu(params, n) > eps) ++n;
  return n;
}

double finite_rank_log_count(double op_norm, std::size_t rank, double eps) {
  if (op_norm < 0.0) throw DomainError("operator norm must be nonnegative");
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  return static_cast<double>(rank) * std::log1p(2.0 * op_norm / eps);
}

double finite_rank_log_bound(double op_norm, std::size_t rank, double eps) {
  if (op_norm <= eps) return 0.0;
  return finite_rank_log_count(op_norm, rank, eps);
}

double upper_bound_log(const KernelParams& params, double eps) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (eps >= mu(params, 0)) return 0.0;
  const std::size_t n = scale_index(params, eps);
  return finite_rank_log_count(embedding_norm(params), 2 * n, eps);
}

double lower_bound_dimension(const KernelParams& params, double eps) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  return std::log(eps * eps * (1.0 - params.a())) / std::log(params.a());
}

double lower_bound_log(const KernelParams& params, double eps,
                       DeterminantConvention convention) {
  const double dim = lower_bound_dimension(params, eps);
  if (dim < 1.0) {
    throw DomainError(fmt::format(
        "eps = {} too large for the lower bound (n_eps = {} < 1)", eps, dim));
  }
  const double n = std::ceil(dim);
  double log_count = n * std::log(1.0 / eps);
  if (convention == DeterminantConvention::ScaledBasis) {
    // Basis function k has frequency index floor(k/2); det contributes a^index.
    double index_sum = 0.0;
    for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
      index_sum += static_cast<double>(k / 2);
    }
    log_count += 0.5 * index_sum * std::log(params.a());
  }
  return std::max(0.0, log_count);
}

double entropy_normalizer(const KernelParams& params, double eps) {
  const double l = std::log(1.0 / (eps * std::sqrt(1.0 - params.a())));
  return l * l / std::log(1.0 / params.a());
}

BallSamples sample_unit_ball_flat(const KernelParams& params, std::size_t pairs,
                                  std::size_t count, std::uint64_t seed) {
  (void)params;
  if (pairs == 0) throw DomainError("unit-ball sampling needs at least one pair");
  const std::size_t dim = 2 * pairs;
  BallSamples samples;
  samples.pairs = pairs;
  samples.coeffs.resize(count * dim);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (std::size_t i = 0; i < count; ++i) {
    double* row = samples.coeffs.data() + i * dim;
    double norm2 = 0.0;
    while (norm2 == 0.0) {
      norm2 = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        row[k] = gauss(rng);
        norm2 += row[k] * row[k];
      }
    }
    const double radius = std::pow(uniform(rng), 1.0 / static_cast<double>(dim));
    const double scale = radius / std::sqrt(norm2);
    for (std::size_t k = 0; k < dim; ++k) row[k] *= scale;
  }
  return samples;
}

RkhsFunction function_from_row(const KernelParams& params, std::span<const double> row) {
  std::vector<double> c(row.size() / 2), d(row.size() / 2);
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] = row[2 * n];
    d[n] = row[2 * n + 1];
  }
  return RkhsFunction(params, std::move(c), std::move(d));
}

std::vector<RkhsFunction> sample_unit_ball(const KernelParams& params, std::size_t pairs,
                                           std::size_t count, std::uint64_t seed) {
  const BallSamples flat = sample_unit_ball_flat(params, pairs, count, seed);
  std::vector<RkhsFunction> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(function_from_row(params, flat.row(i)));
  return out;
}

std::vector<double> sup_grid(std::size_t grid_size) {
  if (grid_size == 0) throw DomainError("sup-norm grid needs at least one point");
  std::vector<double> grid(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j) {
    grid[j] = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(grid_size);
  }
  return grid;
}

double grid_sup_distance(const RkhsFunction& f, const RkhsFunction& g,
                         std::size_t grid_size) {
  double best = 0.0;
  for (double x : sup_grid(grid_size)) {
    best = std::max(best, std::fabs(evaluate(f, x) - evaluate(g, x)));
  }
  return best;
}

namespace {

// Grid sup-norm on span{first `pairs` basis pairs}, working in scaled
// coordinates z = (a^{n/2} c_n, a^{n/2} d_n) where the L2(I) norm is Euclidean.
//
// Three tests decide "grid sup of z < threshold" from cheapest to exact:
//   floor * |z|            <= grid sup   (floor^2 = lambda_min of the grid Gram)
//   grid sup <= sup        <= sum_n |(z_2n, z_2n+1)|
//   max over the grid rows, visited in bit-reversed order for early exit.
class GridSupIndex {
 public:
  GridSupIndex(const KernelParams& params, std::size_t pairs, std::size_t grid_size)
      : dim_(2 * pairs), scales_(2 * pairs) {
    if (grid_size == 0) throw DomainError("sup-norm grid needs at least one point");
    const double root_a = std::sqrt(params.a());
    double s = 1.0;
    for (std::size_t n = 0; n < pairs; ++n) {
      scales_[2 * n] = s;
      scales_[2 * n + 1] = s;
      s *= root_a;
    }
    const std::vector<double> grid = sup_grid(grid_size);
    basis_.resize(grid_size * dim_);
    const auto order = bit_reversed_order(grid_size);
    for (std::size_t r = 0; r < grid_size; ++r) {
      PhaseSequence phases(grid[order[r]], params.b());
      for (std::size_t n = 0; n < pairs; ++n) {
        const double t = phases.next();
        basis_[r * dim_ + 2 * n] = cos_pi(t);
        basis_[r * dim_ + 2 * n + 1] = sin_pi(t);
      }
    }
  }

  std::size_t dim() const { return dim_; }

  void to_scaled(std::span<const double> raw, double* z) const {
    for (std::size_t k = 0; k < dim_; ++k) z[k] = scales_[k] * raw[k];
  }

  std::size_t rows() const { return basis_.size() / dim_; }

  std::size_t panel_rows() const { return std::min<std::size_t>(rows(), 32); }
  const double* row(std::size_t r) const { return basis_.data() + r * dim_; }

  // Rows before first_row are assumed already checked against threshold.
  bool closer_than(const double* dz, double threshold, std::size_t first_row = 0) const {
    double upper = 0.0;
    for (std::size_t k = 0; k < dim_; k += 2) upper += std::hypot(dz[k], dz[k + 1]);
    if (upper < threshold) return true;
    const std::size_t rows = this->rows();
    for (std::size_t r = first_row; r < rows; ++r) {
      const double* row = basis_.data() + r * dim_;
      double v = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) v += row[k] * dz[k];
      if (std::fabs(v) >= threshold) return false;
    }
    return true;
  }

 private:
  static std::vector<std::size_t> bit_reversed_order(std::size_t n) {
    const int bits = std::max(1, static_cast<int>(std::bit_width(n - 1)));
    std::vector<std::pair<std::uint64_t, std::size_t>> keyed(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t rev = 0;
      for (int i = 0; i < bits; ++i) rev |= ((j >> i) & 1u) << (bits - 1 - i);
      keyed[j] = {rev, j};
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::size_t> order(n);
    for (std::size_t j = 0; j < n; ++j) order[j] = keyed[j].second;
    return order;
  }

  std::size_t dim_;
  std::vector<double> scales_;
  std::vector<double> basis_;  // grid_size x dim, rows in bit-reversed grid order
};

// Sequential greedy selection: sample i becomes a center when every existing
// center is at grid distance >= threshold. Returns the selected indices.
std::vector<std::size_t> greedy_select(const GridSupIndex& index, const BallSamples& samples,
                                       double threshold) {
  const std::size_t dim = index.dim();
  const std::size_t count = samples.size();
  const std::size_t panel_rows = index.panel_rows();
  const std::size_t dense_rows = std::min<std::size_t>(panel_rows, 12);
  // Single precision values may only reject pairs clear of the threshold.
  const float dense_threshold = static_cast<float>(threshold + 1e-5 * (1.0 + threshold));

  // Centers in structure-of-arrays layout: coordinates, cached values on the
  // leading grid rows, and a single precision copy of the first few rows.
  std::vector<std::vector<double>> coords(dim);
  std::vector<std::vector<double>> row_values(panel_rows);
  std::vector<std::vector<float>> dense_values(dense_rows);
  std::vector<std::size_t> selected;

  constexpr std::size_t kBlock = 512;
  std::vector<float> gap(kBlock);
  std::vector<std::uint32_t> alive(kBlock);
  std::vector<double> z(dim), dz(dim), zvals(panel_rows);
  std::vector<float> zdense(dense_rows);

  for (std::size_t i = 0; i < count; ++i) {
    index.to_scaled(samples.row(i), z.data());
    for (std::size_t r = 0; r < panel_rows; ++r) {
      const double* row = index.row(r);
      double v = 0.0;
      for (std::size_t k = 0; k < dim; ++k) v += row[k] * z[k];
      zvals[r] = v;
    }
    for (std::size_t r = 0; r < dense_rows; ++r) zdense[r] = static_cast<float>(zvals[r]);

    const std::size_t centers = selected.size();
    bool conflict = false;
    for (std::size_t base = 0; base < centers && !conflict; base += kBlock) {
      const std::size_t len = std::min(kBlock, centers - base);
      {
        const float* vals = dense_values[0].data() + base;
        const float vz = zdense[0];
        for (std::size_t c = 0; c < len; ++c) gap[c] = std::fabs(vals[c] - vz);
      }
      for (std::size_t r = 1; r < dense_rows; ++r) {
        const float* vals = dense_values[r].data() + base;
        const float vz = zdense[r];
        for (std::size_t c = 0; c < len; ++c) gap[c] = std::max(gap[c], std::fabs(vals[c] - vz));
      }
      std::size_t live = 0;
      for (std::size_t c = 0; c < len; ++c) {
        if (gap[c] < dense_threshold) alive[live++] = static_cast<std::uint32_t>(c);
      }
      for (std::size_t r = 0; r < panel_rows && live > 0; ++r) {
        const double* vals = row_values[r].data() + base;
        const double vz = zvals[r];
        std::size_t kept = 0;
        for (std::size_t s = 0; s < live; ++s) {
          const std::uint32_t c = alive[s];
          if (std::fabs(vals[c] - vz) < threshold) alive[kept++] = c;
        }
        live = kept;
      }
      for (std::size_t s = 0; s < live && !conflict; ++s) {
        for (std::size_t k = 0; k < dim; ++k) dz[k] = coords[k][base + alive[s]] - z[k];
        conflict = index.closer_than(dz.data(), threshold, panel_rows);
      }
    }
    if (!conflict) {
      selected.push_back(i);
      for (std::size_t k = 0; k < dim; ++k) coords[k].push_back(z[k]);
      for (std::size_t r = 0; r < panel_rows; ++r) row_values[r].push_back(zvals[r]);
      for (std::size_t r = 0; r < dense_rows; ++r) dense_values[r].push_back(zdense[r]);
    }
  }
  return selected;
}

void check_empirical_args(double eps, std::size_t pairs, std::size_t sample_budget) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (pairs == 0) throw DomainError("empirical covering needs at least one pair");
  if (sample_budget == 0) throw DomainError("sample budget must be positive");
}

}  // namespace

PackingResult greedy_packing(const KernelParams& params, double eps, std::size_t pairs,
                             std::size_t grid_size, std::size_t sample_budget,
                             std::uint64_t seed) {
  check_empirical_args(eps, pairs, sample_budget);
  const BallSamples samples = sample_unit_ball_flat(params, pairs, sample_budget, seed);
  const GridSupIndex index(params, pairs, grid_size);
  const double separation = 2.0 * eps;
  // Keep a relative guard so independent re-evaluation never sees a violation.
  const std::vector<std::size_t> selected =
      greedy_select(index, samples, separation * (1.0 + 1e-9));

  PackingResult result;
  result.eps = eps;
  result.separation = separation;
  result.pairs = pairs;
  result.grid_size = grid_size;
  result.seed = seed;
  result.samples_used = samples.size();
  result.count = selected.size();
  result.centers.pairs = pairs;
  result.centers.coeffs.reserve(selected.size() * 2 * pairs);
  for (std::size_t i : selected) {
    const auto row = samples.row(i);
    result.centers.coeffs.insert(result.centers.coeffs.end(), row.begin(), row.end());
  }
  return result;
}

CoverResult greedy_cover(const KernelParams& params, double eps, std::size_t pairs,
                         std::size_t grid_size, std::size_t sample_budget,
                         std::uint64_t seed) {
  check_empirical_args(eps, pairs, sample_budget);
  const BallSamples samples = sample_unit_ball_flat(params, pairs, sample_budget, seed);
  const GridSupIndex index(params, pairs, grid_size);
  // Covered means distance <= eps, i.e. < the next representable value.
  const double threshold = std::nextafter(eps, std::numeric_limits<double>::infinity());
  const std::vector<std::size_t> selected = greedy_select(index, samples, threshold);

  CoverResult result;
  result.eps = eps;
  result.count = selected.size();
  result.log_count = std::log(static_cast<double>(selected.size()));
  result.samples_used = samples.size();
  result.seed = seed;
  return result;
}

double min_pairwise_distance(const KernelParams& params, const PackingResult& packing) {
  const std::vector<double> grid = sup_grid(packing.grid_size);
  const std::size_t k = packing.count;
  std::vector<double> values(k * grid.size());
  for (std::size_t i = 0; i < k; ++i) {
    const RkhsFunction f = packing.center(params, i);
    for (std::size_t j = 0; j < grid.size(); ++j) values[i * grid.size() + j] = evaluate(f, grid[j]);
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = i + 1; l < k; ++l) {
      double d = 0.0;
      for (std::size_t j = 0; j < grid.size(); ++j) {
        d = std::max(d, std::fabs(values[i * grid.size() + j] - values[l * grid.size() + j]));
      }
      best = std::min(best, d);
    }
  }
  return best;
}

std::size_t RankRule::pairs_for(const KernelParams& params, double eps) const {
  if (kind == Kind::Fixed) {
    if (fixed_pairs == 0) throw DomainError("fixed rank rule needs at least one pair");
    return fixed_pairs;
  }
  return scale_index(params, eps);
}

CoveringCurve covering_curve(const KernelParams& params, std::span<const double> eps_list,
                             const RankRule& rank_rule, const EmpiricalBudget& budget,
                             std::uint64_t seed) {
  const double mu0 = mu(params, 0);
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0.0) || eps_list[i] >= mu0) {
      throw DomainError(fmt::format("eps = {} must lie in (0, mu_0 = {})", eps_list[i], mu0));
    }
    if (i > 0 && !(eps_list[i] < eps_list[i - 1])) {
      throw DomainError("eps list must be strictly decreasing");
    }
  }
  CoveringCurve curve;
  curve.seed = seed;
  for (double eps : eps_list) {
    CurveRow row;
    row.eps = eps;
    row.scale_index = scale_index(params, eps);
    row.log_lower = lower_bound_log(params, eps);
    row.log_upper = upper_bound_log(params, eps);
    row.pairs = rank_rule.pairs_for(params, eps);
    row.tail_norm = mu(params, row.pairs);
    if (budget.sample_budget > 0) {
      if (budget.packing) {
        const PackingResult pack = greedy_packing(params, eps, row.pairs, budget.grid_size,
                                                  budget.sample_budget, seed);
        row.log_pack = std::log(static_cast<double>(pack.count));
        row.ratio = *row.log_pack / entropy_normalizer(params, eps);
      }
      if (budget.cover) {
        row.log_cover = greedy_cover(params, eps, row.pairs, budget.grid_size,
                                     budget.sample_budget, seed)
                            .log_count;
      }
    }
    curve.rows.push_back(row);
  }
  return curve;
}

RatioCheck asymptotic_ratio_check(const KernelParams& params, double eps_lo, double eps_hi,
                                  std::size_t steps) {
  if (!(eps_lo > 0.0 && eps_lo < eps_hi && eps_hi < mu(params, 0))) {
    throw DomainError("ratio check needs 0 < eps_lo < eps_hi < mu_0");
  }
  if (steps < 2) throw DomainError("ratio check needs at least two grid points");
  RatioCheck check;
  check.min_ratio = std::numeric_limits<double>::infinity();
  check.max_ratio = -std::numeric_limits<double>::infinity();
  const double log_step = std::log(eps_lo / eps_hi) / static_cast<double>(steps - 1);
  double upper_min = std::numeric_limits<double>::infinity();
  double upper_max = 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    const double eps =
        i + 1 == steps ? eps_lo : eps_hi * std::exp(log_step * static_cast<double>(i));
    const double norm = entropy_normalizer(params, eps);
    const double lower = lower_bound_log(params, eps) / norm;
    const double upper = upper_bound_log(params, eps) / norm;
    check.eps.push_back(eps);
    check.normalized_lower.push_back(lower);
    check.normalized_upper.push_back(upper);
    check.min_ratio = std::min({check.min_ratio, lower, upper});
    check.max_ratio = std::max({check.max_ratio, lower, upper});
    if (eps <= 10.0 * eps_lo * (1.0 + 1e-12)) {
      upper_min = std::min(upper_min, upper);
      upper_max = std::max(upper_max, upper);
    }
  }
  check.upper_variation_last_decade = (upper_max - upper_min) / upper_min;
  return check;
}

}  // namespace wfk
