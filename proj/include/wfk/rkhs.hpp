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

#ifndef WFK_RKHS_HPP
#define WFK_RKHS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "wfk/params.hpp"

namespace wfk {

/**
 * Element of H_W with finitely many coefficient pairs:
 *
 *   f(x) = sum_{n<m} a^{n/2} [c_n cos(b^n pi x) + d_n sin(b^n pi x)],
 *
 * with ||f||_W^2 = sum c_n^2 + d_n^2.
 */
class RkhsFunction {
 public:
  /// Throws std::invalid_argument when the sequences differ in length.
  RkhsFunction(const KernelParams& params, std::vector<double> cos_coeffs,
               std::vector<double> sin_coeffs);

  static RkhsFunction zero(const KernelParams& params) {
    return RkhsFunction(params, {}, {});
  }

  const KernelParams& params() const { return params_; }
  std::span<const double> cos_coeffs() const { return cos_; }
  std::span<const double> sin_coeffs() const { return sin_; }
  std::size_t size() const { return cos_.size(); }

  double norm_squared() const;
  double norm() const;

 private:
  KernelParams params_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

RkhsFunction make_function(const KernelParams& params, std::vector<double> cos_coeffs,
                           std::vector<double> sin_coeffs);

/// Exact finite sum; phases are reduced exactly, so no truncation error.
double evaluate(const RkhsFunction& f, double x);

/// sum over the shared index range of c_n e_n + d_n f_n.
/// Throws std::invalid_argument when the operands carry different params.
double inner_product(const RkhsFunction& f, const RkhsFunction& g);

/// N-pair truncation of W(x, .): c_n = a^{n/2} cos(b^n pi x), d_n = a^{n/2} sin(b^n pi x).
RkhsFunction kernel_section(const KernelParams& params, double x, std::size_t terms);

/// <f, W(x, .)> with the section truncated at f's own length.
double reproduce(const RkhsFunction& f, double x);

/// Orthogonal projections onto the first N pairs and onto the rest. The high
/// part keeps the original indexing with zeros below N.
RkhsFunction project_low(const RkhsFunction& f, std::size_t terms);
RkhsFunction project_high(const RkhsFunction& f, std::size_t terms);

/// ||I_W||: sup-norm of the embedding H_W -> C(I).
double embedding_norm(const KernelParams& params);

/// Unit-norm witness with c_n proportional to a^{n/2}, n < terms. Its value at
/// 0 is ((1 - a^terms)/(1 - a))^{1/2}, approaching ||I_W||.
RkhsFunction embedding_witness(const KernelParams& params, std::size_t terms);

/// ||I_W P_U^N||^2 = (1 - a^N)/(1 - a) and ||I_W P_V^N||^2 = a^N/(1 - a).
double lowpass_norm_squared(const KernelParams& params, std::size_t terms);
double highpass_norm_squared(const KernelParams& params, std::size_t terms);
double lowpass_norm(const KernelParams& params, std::size_t terms);
double highpass_norm(const KernelParams& params, std::size_t terms);

/**
 * Function whose coefficients follow a finite head and then the fixed tail
 * c_n = d_n = a^{n/2} for n >= tail_start. For ab >= 1 every such function is
 * continuous and nowhere differentiable.
 */
class TailedRkhsFunction {
 public:
  /// head.size() must equal tail_start.
  TailedRkhsFunction(RkhsFunction head, std::size_t tail_start);

  const RkhsFunction& head() const { return head_; }
  std::size_t tail_start() const { return tail_start_; }
  const KernelParams& params() const { return head_.params(); }

  /// ||head||^2 + 2 a^N / (1 - a).
  double norm_squared() const;

 private:
  RkhsFunction head_;
  std::size_t tail_start_;
};

/// f_N: keeps the first N coefficient pairs of f and replaces the rest by the tail rule.
TailedRkhsFunction cnd_approximant(const RkhsFunction& f, std::size_t terms);

/// ||f - g||_W^2 in closed form (f has finite support).
double distance_squared(const RkhsFunction& f, const TailedRkhsFunction& g);

/// head(x) + sum_{n >= N} a^n [cos(b^n pi x) + sin(b^n pi x)], tail truncated
/// so that its remainder is <= tol.
double evaluate(const TailedRkhsFunction& f, double x, double tol = kDefaultTol);

}  // namespace wfk

#endif  // WFK_RKHS_HPP
