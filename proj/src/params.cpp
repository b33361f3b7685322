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

#include "wfk/params.hpp"

#include <cmath>
#include <limits>
#include <fmt/format.h>

#include "wfk/errors.hpp"

namespace wfk {

KernelParams::KernelParams(double a, std::uint64_t b)
    : a_(a),
      b_(b),
      holder_(-std::log(a) / std::log(static_cast<double>(b))),
      variance_(1.0 / (1.0 - a)) {}

KernelParams validate_params(double a, long long b) {
  if (!(a > 0.0 && a < 1.0)) {
    throw DomainError(fmt::format("amplitude ratio a={} must lie in (0, 1)", a));
  }
  if (b < 2) {
    throw DomainError(fmt::format("frequency base b={} must be >= 2", b));
  }
  // a = 1/b typed as a decimal may land one ulp below; accept that rounding.
  const double ab = a * static_cast<double>(b);
  if (ab < 1.0 - 4.0 * std::numeric_limits<double>::epsilon()) {
    throw DomainError(fmt::format("a*b = {} must be >= 1", ab));
  }
  return KernelParams(a, static_cast<std::uint64_t>(b));
}

std::size_t geometric_terms(double ratio, double tol, double multiplier,
                            std::size_t max_terms) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw DomainError(fmt::format("truncation tolerance {} must be positive", tol));
  }
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw DomainError(fmt::format("geometric ratio {} must lie in (0, 1)", ratio));
  }
  if (!(multiplier > 0.0) || !std::isfinite(multiplier)) {
    throw DomainError(fmt::format("tail multiplier {} must be positive", multiplier));
  }
  const double head = multiplier / (1.0 - ratio);
  auto tail = [&](std::size_t n) {
    return std::pow(ratio, static_cast<double>(n)) * head;
  };
  if (head <= tol) return 0;
  // Start from the logarithmic estimate and settle on the exact boundary.
  const double guess = std::ceil(std::log(tol / head) / std::log(ratio));
  std::size_t n = guess > 1.0 ? static_cast<std::size_t>(guess) : 1;
  if (n > max_terms + 1) {
    throw InfeasibleTruncation(fmt::format(
        "tolerance {} needs ~{} terms, more than the cap of {}", tol, n, max_terms));
  }
  while (n > 1 && tail(n - 1) <= tol) --n;
  while (tail(n) > tol) ++n;
  if (n > max_terms) {
    throw InfeasibleTruncation(fmt::format(
        "tolerance {} needs {} terms, more than the cap of {}", tol, n, max_terms));
  }
  return n;
}

std::size_t truncation_terms(const KernelParams& params, double tol,
                             std::size_t max_terms) {
  return geometric_terms(params.a(), tol, 1.0, max_terms);
}

}  // namespace wfk
