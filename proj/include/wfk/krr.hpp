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

#ifndef WFK_KRR_HPP
#define WFK_KRR_HPP

#include <span>
#include <vector>

#include "wfk/params.hpp"
#include "wfk/rkhs.hpp"

namespace wfk {

/// Kernel ridge regression predictor sum_i weights[i] W(x, centers[i]).
struct KrrModel {
  KernelParams params;
  std::vector<double> centers;
  std::vector<double> weights;
  double ridge = 0.0;
  double tol = kDefaultTol;
};

/// Largest training set accepted by the dense solver.
inline constexpr std::size_t kMaxKrrPoints = 2000;

/// ridge = 1e-8 / (1 - a), scaled with the kernel diagonal.
double default_ridge(const KernelParams& params);

/**
 * Solves (G + ridge I) w = y by Cholesky, G = gram_matrix(params, xs, tol).
 *
 * Throws DomainError for duplicated or out-of-range abscissae, mismatched or
 * empty inputs, negative ridge, or more than kMaxKrrPoints points;
 * NumericError when the system is numerically singular.
 */
KrrModel fit(const KernelParams& params, std::span<const double> xs,
             std::span<const double> ys, double ridge, double tol = kDefaultTol);

double predict(const KrrModel& model, double x);

/// Predictions at many points through the coefficient form of the predictor.
std::vector<double> predict(const KrrModel& model, std::span<const double> xs);

/// The predictor as an element of H_W (truncated sections).
RkhsFunction as_rkhs_function(const KrrModel& model);

/// ||f||_W via Parseval on as_rkhs_function, equal to sqrt(w^T G w).
double rkhs_norm(const KrrModel& model);

}  // namespace wfk

#endif  // WFK_KRR_HPP
