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

// Reference evaluators and random generators shared by the tests.

#ifndef WFK_TESTS_SUPPORT_HPP
#define WFK_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace wfk::testing {

// Direct summation in long double with fmodl on the argument. The product
// b^n x carries an absolute error near b^n * 5e-20, so callers keep b^n small.
inline long double reference_weierstrass(long double a, long double b, long double x,
                                         int terms) {
  const long double pi = 3.141592653589793238462643383279502884L;
  long double sum = 0.0L;
  long double amp = 1.0L;
  long double freq = 1.0L;
  for (int n = 0; n < terms; ++n) {
    const long double t = std::fmod(freq * x, 2.0L);
    sum += amp * std::cos(pi * t);
    amp *= a;
    freq *= b;
  }
  return sum;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::vector<double> uniform_vector(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (double& x : v) x = uniform(lo, hi);
    return v;
  }
  std::vector<double> normal_vector(std::size_t n) {
    std::vector<double> v(n);
    for (double& x : v) x = normal();
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

struct ParamCase {
  double a;
  long long b;
};

// Smallest odd b with a*b >= 1 for the standard amplitude set.
inline const std::vector<ParamCase> kStandardParams{{0.3, 5}, {0.5, 3}, {0.7, 3}, {0.9, 3}};

}  // namespace wfk::testing

#endif  // WFK_TESTS_SUPPORT_HPP
