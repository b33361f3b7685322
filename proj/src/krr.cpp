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

#include "wfk/krr.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <fmt/format.h>

#include "wfk/errors.hpp"
#include "wfk/kernel.hpp"

namespace wfk {

double default_ridge(const KernelParams& params) { return 1e-8 * params.variance(); }

KrrModel fit(const KernelParams& params, std::span<const double> xs,
             std::span<const double> ys, double ridge, double tol) {
  if (xs.empty() || xs.size() != ys.size()) {
    throw DomainError("fit needs matching, non-empty x and y samples");
  }
  if (xs.size() > kMaxKrrPoints) {
    throw DomainError(fmt::format("dense fit is capped at {} points", kMaxKrrPoints));
  }
  if (!(ridge >= 0.0)) throw DomainError("ridge must be nonnegative");
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("training abscissae must be distinct");
  }

  const GramMatrix gram = gram_matrix(params, xs, tol);
  const auto n = static_cast<Eigen::Index>(xs.size());
  Eigen::MatrixXd system = gram.entries;
  system.diagonal().array() += ridge;
  Eigen::LLT<Eigen::MatrixXd> llt(system);
  if (llt.info() != Eigen::Success ||
      llt.rcond() < 16.0 * std::numeric_limits<double>::epsilon()) {
    throw NumericError("kernel system is numerically singular; increase the ridge");
  }
  const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(ys.data(), n);
  const Eigen::VectorXd w = llt.solve(rhs);

  KrrModel model{params, std::vector<double>(xs.begin(), xs.end()),
                 std::vector<double>(w.data(), w.data() + w.size()), ridge, tol};
  return model;
}

double predict(const KrrModel& model, double x) {
  double sum = 0.0;
  for (std::size_t i = 0; i < model.centers.size(); ++i) {
    sum += model.weights[i] * eval_kernel(model.params, x, model.centers[i], model.tol);
  }
  return sum;
}

std::vector<double> predict(const KrrModel& model, std::span<const double> xs) {
  const RkhsFunction f = as_rkhs_function(model);
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = evaluate(f, xs[i]);
  return out;
}

RkhsFunction as_rkhs_function(const KrrModel& model) {
  const std::size_t terms = truncation_terms(model.params, model.tol);
  std::vector<double> c(terms, 0.0), d(terms, 0.0);
  std::vector<double> phi(2 * terms);
  for (std::size_t i = 0; i < model.centers.size(); ++i) {
    feature_map_into(model.params, model.centers[i], phi);
    for (std::size_t n = 0; n < terms; ++n) {
      c[n] += model.weights[i] * phi[2 * n];
      d[n] += model.weights[i] * phi[2 * n + 1];
    }
  }
  return RkhsFunction(model.params, std::move(c), std::move(d));
}

double rkhs_norm(const KrrModel& model) { return as_rkhs_function(model).norm(); }

}  // namespace wfk
