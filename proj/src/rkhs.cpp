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

#include "wfk/rkhs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wfk/errors.hpp"
#include "wfk/phase.hpp"

namespace wfk {

RkhsFunction::RkhsFunction(const KernelParams& params, std::vector<double> cos_coeffs,
                           std::vector<double> sin_coeffs)
    : params_(params), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
  if (cos_.size() != sin_.size()) {
    throw std::invalid_argument("cosine and sine coefficient sequences differ in length");
  }
}

double RkhsFunction::norm_squared() const {
  double sum = 0.0;
  for (std::size_t n = 0; n < size(); ++n) sum += cos_[n] * cos_[n] + sin_[n] * sin_[n];
  return sum;
}

double RkhsFunction::norm() const { return std::sqrt(norm_squared()); }

RkhsFunction make_function(const KernelParams& params, std::vector<double> cos_coeffs,
                           std::vector<double> sin_coeffs) {
  return RkhsFunction(params, std::move(cos_coeffs), std::move(sin_coeffs));
}

double evaluate(const RkhsFunction& f, double x) {
  if (f.size() == 0) return 0.0;
  PhaseSequence phases(x, f.params().b());
  const double root_a = std::sqrt(f.params().a());
  const auto c = f.cos_coeffs();
  const auto d = f.sin_coeffs();
  double scale = 1.0;
  double sum = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    const double t = phases.next();
    sum += scale * (c[n] * cos_pi(t) + d[n] * sin_pi(t));
    scale *= root_a;
  }
  return sum;
}

double inner_product(const RkhsFunction& f, const RkhsFunction& g) {
  if (!(f.params() == g.params())) {
    throw std::invalid_argument("inner product of functions from different spaces");
  }
  const std::size_t shared = std::min(f.size(), g.size());
  double sum = 0.0;
  for (std::size_t n = 0; n < shared; ++n) {
    sum += f.cos_coeffs()[n] * g.cos_coeffs()[n] + f.sin_coeffs()[n] * g.sin_coeffs()[n];
  }
  return sum;
}

RkhsFunction kernel_section(const KernelParams& params, double x, std::size_t terms) {
  std::vector<double> c(terms), d(terms);
  PhaseSequence phases(x, params.b());
  const double root_a = std::sqrt(params.a());
  double scale = 1.0;
  for (std::size_t n = 0; n < terms; ++n) {
    const double t = phases.next();
    c[n] = scale * cos_pi(t);
    d[n] = scale * sin_pi(t);
    scale *= root_a;
  }
  return RkhsFunction(params, std::move(c), std::move(d));
}

double reproduce(const RkhsFunction& f, double x) {
  return inner_product(f, kernel_section(f.params(), x, f.size()));
}

RkhsFunction project_low(const RkhsFunction& f, std::size_t terms) {
  const std::size_t keep = std::min(terms, f.size());
  return RkhsFunction(
      f.params(), std::vector<double>(f.cos_coeffs().begin(), f.cos_coeffs().begin() + keep),
      std::vector<double>(f.sin_coeffs().begin(), f.sin_coeffs().begin() + keep));
}

RkhsFunction project_high(const RkhsFunction& f, std::size_t terms) {
  if (terms >= f.size()) return RkhsFunction::zero(f.params());
  std::vector<double> c(f.cos_coeffs().begin(), f.cos_coeffs().end());
  std::vector<double> d(f.sin_coeffs().begin(), f.sin_coeffs().end());
  std::fill_n(c.begin(), terms, 0.0);
  std::fill_n(d.begin(), terms, 0.0);
  return RkhsFunction(f.params(), std::move(c), std::move(d));
}

double embedding_norm(const KernelParams& params) { return std::sqrt(params.variance()); }

RkhsFunction embedding_witness(const KernelParams& params, std::size_t terms) {
  if (terms == 0) throw DomainError("embedding witness needs at least one term");
  std::vector<double> c(terms), d(terms, 0.0);
  const double root_a = std::sqrt(params.a());
  double scale = 1.0;
  for (std::size_t n = 0; n < terms; ++n) {
    c[n] = scale;
    scale *= root_a;
  }
  const double norm = std::sqrt(lowpass_norm_squared(params, terms));
  for (double& v : c) v /= norm;
  return RkhsFunction(params, std::move(c), std::move(d));
}

double lowpass_norm_squared(const KernelParams& params, std::size_t terms) {
  return (1.0 - std::pow(params.a(), static_cast<double>(terms))) / (1.0 - params.a());
}

double highpass_norm_squared(const KernelParams& params, std::size_t terms) {
  return std::pow(params.a(), static_cast<double>(terms)) / (1.0 - params.a());
}

double lowpass_norm(const KernelParams& params, std::size_t terms) {
  return std::sqrt(lowpass_norm_squared(params, terms));
}

double highpass_norm(const KernelParams& params, std::size_t terms) {
  return std::sqrt(highpass_norm_squared(params, terms));
}

TailedRkhsFunction::TailedRkhsFunction(RkhsFunction head, std::size_t tail_start)
    : head_(std::move(head)), tail_start_(tail_start) {
  if (head_.size() != tail_start_) {
    throw std::invalid_argument("head length must equal the tail start index");
  }
}

double TailedRkhsFunction::norm_squared() const {
  return head_.norm_squared() + 2.0 * highpass_norm_squared(params(), tail_start_);
}

TailedRkhsFunction cnd_approximant(const RkhsFunction& f, std::size_t terms) {
  std::vector<double> c(terms, 0.0), d(terms, 0.0);
  const std::size_t keep = std::min(terms, f.size());
  std::copy_n(f.cos_coeffs().begin(), keep, c.begin());
  std::copy_n(f.sin_coeffs().begin(), keep, d.begin());
  return TailedRkhsFunction(RkhsFunction(f.params(), std::move(c), std::move(d)), terms);
}

double distance_squared(const RkhsFunction& f, const TailedRkhsFunction& g) {
  if (!(f.params() == g.params())) {
    throw std::invalid_argument("distance between functions from different spaces");
  }
  const auto& params = f.params();
  const std::size_t start = g.tail_start();
  double sum = 0.0;
  // Head region: both finite.
  for (std::size_t n = 0; n < start; ++n) {
    const double fc = n < f.size() ? f.cos_coeffs()[n] : 0.0;
    const double fd = n < f.size() ? f.sin_coeffs()[n] : 0.0;
    const double dc = fc - g.head().cos_coeffs()[n];
    const double dd = fd - g.head().sin_coeffs()[n];
    sum += dc * dc + dd * dd;
  }
  // Tail overlapping f's support.
  const double root_a = std::sqrt(params.a());
  for (std::size_t n = start; n < f.size(); ++n) {
    const double tail = std::pow(root_a, static_cast<double>(n));
    const double dc = f.cos_coeffs()[n] - tail;
    const double dd = f.sin_coeffs()[n] - tail;
    sum += dc * dc + dd * dd;
  }
  // Beyond both supports every pair contributes 2 a^n.
  sum += 2.0 * highpass_norm_squared(params, std::max(start, f.size()));
  return sum;
}

double evaluate(const TailedRkhsFunction& f, double x, double tol) {
  const auto& params = f.params();
  const std::size_t start = f.tail_start();
  const std::size_t end =
      std::max(start, geometric_terms(params.a(), tol, std::numbers::sqrt2));
  PhaseSequence phases(x, params.b());
  const double root_a = std::sqrt(params.a());
  double scale = 1.0;
  double sum = 0.0;
  for (std::size_t n = 0; n < end; ++n) {
    const double t = phases.next();
    if (n < start) {
      sum += scale * (f.head().cos_coeffs()[n] * cos_pi(t) +
                      f.head().sin_coeffs()[n] * sin_pi(t));
    } else {
      sum += scale * scale * (cos_pi(t) + sin_pi(t));
    }
    scale *= root_a;
  }
  return sum;
}

}  // namespace wfk
