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

#ifndef WFK_PARAMS_HPP
#define WFK_PARAMS_HPP

#include <cstddef>
#include <cstdint>

namespace wfk {

/// Default absolute truncation tolerance for every series evaluation.
inline constexpr double kDefaultTol = 1e-10;

/// Default cap on the number of series terms a tolerance may request.
inline constexpr std::size_t kDefaultMaxTerms = 10000;

/**
 * Validated parameters of the Weierstrass kernel: amplitude ratio a in (0, 1)
 * and integer frequency base b >= 2 with a*b >= 1.
 *
 * Instances can only be obtained through validate_params(), so holding a
 * KernelParams is proof that the invariants hold.
 */
class KernelParams {
 public:
  double a() const { return a_; }
  std::uint64_t b() const { return b_; }

  /// Hoelder exponent -ln(a)/ln(b) of the series.
  double holder_exponent() const { return holder_; }

  /// Kernel diagonal 1/(1-a), i.e. w(0) and the squared embedding norm.
  double variance() const { return variance_; }

  bool operator==(const KernelParams& other) const = default;

 private:
  friend KernelParams validate_params(double a, long long b);
  KernelParams(double a, std::uint64_t b);

  double a_;
  std::uint64_t b_;
  double holder_;
  double variance_;
};

/// Validates (a, b). Throws DomainError if a is not in (0, 1), b < 2 or a*b < 1.
KernelParams validate_params(double a, long long b);

struct TruncationPolicy {
  double tol = kDefaultTol;
  std::size_t max_terms = kDefaultMaxTerms;
};

/**
 * Smallest N with a^N/(1-a) <= tol, the certified geometric tail bound of the
 * cosine series. Returns 0 when tol >= 1/(1-a).
 *
 * Throws DomainError for tol <= 0 and InfeasibleTruncation when N would exceed
 * max_terms.
 */
std::size_t truncation_terms(const KernelParams& params, double tol,
                             std::size_t max_terms = kDefaultMaxTerms);

inline std::size_t truncation_terms(const KernelParams& params,
                                    const TruncationPolicy& policy) {
  return truncation_terms(params, policy.tol, policy.max_terms);
}

/// Same rule for an arbitrary geometric ratio in (0, 1) and tail multiplier.
std::size_t geometric_terms(double ratio, double tol, double multiplier = 1.0,
                            std::size_t max_terms = kDefaultMaxTerms);

/// True when x lies in the closed interval I = [-1, 1].
inline bool in_unit_interval(double x) { return x >= -1.0 && x <= 1.0; }

}  // namespace wfk

#endif  // WFK_PARAMS_HPP
