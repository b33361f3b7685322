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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"
#include "wfk/kernel.hpp"
#include "wfk/rkhs.hpp"

namespace wfk {
namespace {

using testing::Gen;
using testing::kStandardParams;

constexpr std::size_t kSupGrid = 100000;

RkhsFunction random_function(const KernelParams& p, std::size_t m, Gen& gen) {
  return make_function(p, gen.normal_vector(m), gen.normal_vector(m));
}

// Reverse-order long double summation with fmodl phases.
double reference_evaluate(const RkhsFunction& f, double x) {
  const long double pi = std::numbers::pi_v<long double>;
  const long double a = f.params().a();
  const long double b = static_cast<long double>(f.params().b());
  long double sum = 0.0L;
  for (std::size_t k = f.size(); k-- > 0;) {
    const long double freq = std::pow(b, static_cast<long double>(k));
    const long double t = std::fmod(freq * static_cast<long double>(x), 2.0L);
    const long double scale = std::pow(a, static_cast<long double>(k) / 2.0L);
    sum += scale * (f.cos_coeffs()[k] * std::cos(pi * t) + f.sin_coeffs()[k] * std::sin(pi * t));
  }
  return static_cast<double>(sum);
}

std::vector<double> unit_grid(std::size_t n) {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return xs;
}

TEST(MakeFunction, ZeroFunction) {
  const KernelParams p = validate_params(0.5, 3);
  const RkhsFunction f = make_function(p, {}, {});
  EXPECT_EQ(f.size(), 0u);
  EXPECT_EQ(f.norm(), 0.0);
  EXPECT_EQ(evaluate(f, 0.3), 0.0);
  EXPECT_EQ(evaluate(f, -7.25), 0.0);
  EXPECT_EQ(reproduce(f, 0.4), 0.0);
}

TEST(MakeFunction, FirstBasisElement) {
  const KernelParams p = validate_params(0.5, 3);
  const RkhsFunction f = make_function(p, {1.0}, {0.0});
  EXPECT_DOUBLE_EQ(f.norm(), 1.0);
  EXPECT_DOUBLE_EQ(evaluate(f, 1.0), -1.0);
  for (double x : {-0.9, -0.2, 0.0, 0.33, 0.71}) {
    EXPECT_NEAR(evaluate(f, x), std::cos(std::numbers::pi * x), 1e-15);
  }
}

TEST(MakeFunction, SecondBasisElementIsScaled) {
  const KernelParams p = validate_params(0.5, 3);
  const RkhsFunction f = make_function(p, {0.0, 1.0}, {0.0, 0.0});
  EXPECT_DOUBLE_EQ(f.norm(), 1.0);
  for (double x : {-0.9, -0.2, 0.0, 0.33, 0.71}) {
    EXPECT_NEAR(evaluate(f, x), std::cos(3.0 * std::numbers::pi * x) / std::sqrt(2.0), 1e-15);
  }
}

TEST(MakeFunction, LengthMismatchThrows) {
  const KernelParams p = validate_params(0.5, 3);
  EXPECT_THROW(make_function(p, {1.0, 2.0}, {1.0}), std::invalid_argument);
}

TEST(Evaluate, MatchesReverseOrderReference) {
  Gen gen(101);
  for (const auto& c : kStandardParams) {
    const KernelParams p = validate_params(c.a, c.b);
    for (int trial = 0; trial < 40; ++trial) {
      const RkhsFunction f = random_function(p, static_cast<std::size_t>(gen.integer(1, 16)), gen);
      const double x = gen.uniform(-1.0, 1.0);
      EXPECT_NEAR(evaluate(f, x), reference_evaluate(f, x), 1e-12 * std::max(1.0, f.norm()));
    }
  }
}

TEST(InnerProduct, ParsevalAndPositivity) {
  Gen gen(7);
  const KernelParams p = validate_params(0.7, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const RkhsFunction f = random_function(p, static_cast<std::size_t>(gen.integer(0, 12)), gen);
    double direct = 0.0;
    for (std::size_t n = 0; n < f.size(); ++n) {
      direct += f.cos_coeffs()[n] * f.cos_coeffs()[n] + f.sin_coeffs()[n] * f.sin_coeffs()[n];
    }
    EXPECT_EQ(inner_product(f, f), direct);
    EXPECT_EQ(f.norm_squared(), direct);
    EXPECT_GE(inner_product(f, f), 0.0);
  }
  const RkhsFunction zeros = make_function(p, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0});
  EXPECT_EQ(inner_product(zeros, zeros), 0.0);
}

TEST(InnerProduct, BasisIsOrthonormal) {
  const KernelParams p = validate_params(0.5, 3);
  const std::size_t m = 6;
  std::vector<RkhsFunction> basis;
  for (std::size_t n = 0; n < m; ++n) {
    std::vector<double> c(m, 0.0), d(m, 0.0);
    c[n] = 1.0;
    basis.push_back(make_function(p, c, d));
    c[n] = 0.0;
    d[n] = 1.0;
    basis.push_back(make_function(p, c, d));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      EXPECT_EQ(inner_product(basis[i], basis[j]), i == j ? 1.0 : 0.0);
    }
  }
}

TEST(InnerProduct, SymmetricUnderPadding) {
  Gen gen(8);
  const KernelParams p = validate_params(0.3, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const RkhsFunction f = random_function(p, static_cast<std::size_t>(gen.integer(0, 10)), gen);
    const RkhsFunction g = random_function(p, static_cast<std::size_t>(gen.integer(0, 10)), gen);
    EXPECT_EQ(inner_product(f, g), inner_product(g, f));
    // Explicit zero padding of the shorter operand.
    const std::size_t m = std::max(f.size(), g.size());
    std::vector<double> fc(f.cos_coeffs().begin(), f.cos_coeffs().end());
    std::vector<double> fd(f.sin_coeffs().begin(), f.sin_coeffs().end());
    fc.resize(m, 0.0);
    fd.resize(m, 0.0);
    EXPECT_EQ(inner_product(make_function(p, fc, fd), g), inner_product(f, g));
  }
}

TEST(InnerProduct, Bilinear) {
  Gen gen(9);
  const KernelParams p = validate_params(0.9, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const RkhsFunction f = random_function(p, 8, gen);
    const RkhsFunction g = random_function(p, 8, gen);
    const RkhsFunction h = random_function(p, 8, gen);
    const double s = gen.normal();
    std::vector<double> c(8), d(8);
    for (std::size_t n = 0; n < 8; ++n) {
      c[n] = s * f.cos_coeffs()[n] + g.cos_coeffs()[n];
      d[n] = s * f.sin_coeffs()[n] + g.sin_coeffs()[n];
    }
    const RkhsFunction combo = make_function(p, c, d);
    EXPECT_NEAR(inner_product(combo, h), s * inner_product(f, h) + inner_product(g, h), 1e-12);
  }
}

TEST(InnerProduct, ParamsMismatchThrows) {
  const RkhsFunction f = make_function(validate_params(0.5, 3), {1.0}, {0.0});
  const RkhsFunction g = make_function(validate_params(0.5, 5), {1.0}, {0.0});
  EXPECT_THROW(inner_product(f, g), std::invalid_argument);
}

TEST(KernelSection, AtOrigin) {
  for (const auto& c : kStandardParams) {
    const KernelParams p = validate_params(c.a, c.b);
    const RkhsFunction s = kernel_section(p, 0.0, 3);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_DOUBLE_EQ(s.cos_coeffs()[0], 1.0);
    EXPECT_DOUBLE_EQ(s.cos_coeffs()[1], std::sqrt(c.a));
    EXPECT_DOUBLE_EQ(s.cos_coeffs()[2], c.a);
    for (double d : s.sin_coeffs()) EXPECT_EQ(d, 0.0);
  }
}

TEST(KernelSection, NormIsLowpassNorm) {
  Gen gen(10);
  for (const auto& c : kStandardParams) {
    const KernelParams p = validate_params(c.a, c.b);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 40));
      const double x = gen.uniform(-1.0, 1.0);
      const double expected = (1.0 - std::pow(c.a, static_cast<double>(n))) / (1.0 - c.a);
      EXPECT_NEAR(kernel_section(p, x, n).norm_squared(), expected, 1e-13 * expected);
    }
  }
}

TEST(KernelSection, InnerProductIsTruncatedKernel) {
  Gen gen(11);
  for (const auto& c : kStandardParams) {
    const KernelParams p = validate_params(c.a, c.b);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 30));
      const double x = gen.uniform(-1.0, 1.0);
      const double y = gen.uniform(-1.0, 1.0);
      const double ip = inner_product(kernel_section(p, x, n), kernel_section(p, y, n));
      EXPECT_NEAR(ip, eval_kernel_terms(p, x, y, n), 1e-13);
      // The section of y reproduces the truncated kernel.
      EXPECT_NEAR(reproduce(kernel_section(p, y, n), x), eval_kernel_terms(p, x, y, n), 1e-13);
    }
  }
}

TEST(Reproduce, MatchesEvaluate) {
  Gen gen(12);
  for (const auto& c : kStandardParams) {
    const KernelParams p = validate_params(c.a, c.b);
    for (int trial = 0; trial < 25; ++trial) {
      const RkhsFunction f = random_function(p, 16, gen);
      for (int i = 0; i < 100; ++i) {
        const double x = gen.uniform(-1.0, 1.0);
        EXPECT_NEAR(reproduce(f, x), evaluate(f, x), 1e-12 * std::max(1.0, f.norm()));
      }
    }
  }
}

TEST(Projection, Extremes) {
  Gen gen(13);
  const KernelParams p = validate_params(0.5, 3);
  const RkhsFunction f = random_function(p, 6, gen);
  EXPECT_EQ(project_low(f, 0).norm_squared(), 0.0);
  EXPECT_EQ(project_high(f, 0).norm_squared(), f.norm_squared());
  EXPECT_EQ(project_low(f, 6).norm_squared(), f.norm_squared());
  EXPECT_EQ(project_high(f, 6).norm_squared(), 0.0);
  EXPECT_EQ(project_low(f, 100).norm_squared(), f.norm_squared());
  EXPECT_EQ(project_high(f, 100).norm_squared(), 0.0);
}

TEST(Projection, PythagorasAndPointwiseSum) {
  Gen gen(14);
  for (const auto& c : kStandardParams) {
    const KernelParams p = validate_params(c.a, c.b);
    for (int trial = 0; trial < 30; ++trial) {
      const RkhsFunction f = random_function(p, static_cast<std::size_t>(gen.integer(0, 12)), gen);
      const std::size_t n = static_cast<std::size_t>(gen.integer(0, 14));
      const RkhsFunction lo = project_low(f, n);
      const RkhsFunction hi = project_high(f, n);
      EXPECT_NEAR(lo.norm_squared() + hi.norm_squared(), f.norm_squared(),
                  4 * std::numeric_limits<double>::epsilon() * f.norm_squared());
      EXPECT_EQ(inner_product(lo, hi), 0.0);
      for (int i = 0; i < 10; ++i) {
        const double x = gen.uniform(-1.0, 1.0);
        EXPECT_NEAR(evaluate(lo, x) + evaluate(hi, x), evaluate(f, x),
                    1e-13 * std::max(1.0, f.norm()));
      }
    }
  }
}

TEST(Projection, ThreePairSplitIsExact) {
  Gen gen(15);
  const KernelParams p = validate_params(0.5, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const RkhsFunction f = random_function(p, 8, gen);
    EXPECT_NEAR(project_low(f, 3).norm_squared() + project_high(f, 3).norm_squared(),
                f.norm_squared(), 4 * std::numeric_limits<double>::epsilon() * f.norm_squared());
  }
}

TEST(EmbeddingNorm, ClosedForms) {
  EXPECT_DOUBLE_EQ(embedding_norm(validate_params(0.5, 3)), std::sqrt(2.0));
  const double n9 = embedding_norm(validate_params(0.9, 3));
  EXPECT_NEAR(n9 * n9, 10.0, 1e-12);
}

TEST(EmbeddingNorm, WitnessAttainsLowpassNorm) {
  const KernelParams p = validate_params(0.5, 3);
  const RkhsFunction w = embedding_witness(p, 20);
  EXPECT_NEAR(w.norm(), 1.0, 1e-15);
  const double expected = std::sqrt((1.0 - std::pow(0.5, 20)) / 0.5);
  EXPECT_NEAR(evaluate(w, 0.0), expected, 1e-14);
  EXPECT_NEAR(evaluate(w, 0.0), std::sqrt(2.0), 1e-6);
}

TEST(EmbeddingNorm, WitnessIsGridMaximum) {
  const std::vector<double> grid = unit_grid(kSupGrid);
  for (const auto& c : kStandardParams) {
    const KernelParams p = validate_params(c.a, c.b);
    for (std::size_t n : {1u, 4u, 8u}) {
      const RkhsFunction w = embedding_witness(p, n);
      const double peak = lowpass_norm(p, n);
      EXPECT_NEAR(evaluate(w, 0.0), peak, 1e-12);
      double top = 0.0;
      for (double x : grid) top = std::max(top, std::abs(evaluate(w, x)));
      EXPECT_LE(top, peak + 1e-9);
    }
  }
}

TEST(EmbeddingNorm, SupBoundOnGrid) {
  Gen gen(16);
  const std::vector<double> grid = unit_grid(kSupGrid);
  for (const auto& c : kStandardParams) {
    const KernelParams p = validate_params(c.a, c.b);
    for (int trial = 0; trial < 3; ++trial) {
      const RkhsFunction f = random_function(p, static_cast<std::size_t>(gen.integer(1, 16)), gen);
      double top = 0.0;
      for (double x : grid) top = std::max(top, std::abs(evaluate(f, x)));
      EXPECT_LE(top, f.norm() * embedding_norm(p) + 1e-9);
    }
  }
}

TEST(OperatorNorms, LowpassAndHighpass) {
  const KernelParams p = validate_params(0.5, 3);
  EXPECT_DOUBLE_EQ(lowpass_norm_squared(p, 1), 1.0);
  EXPECT_DOUBLE_EQ(highpass_norm_squared(p, 1), 1.0);
  EXPECT_NEAR(highpass_norm(p, 4), 0.353553, 1e-6);
  EXPECT_DOUBLE_EQ(highpass_norm(p, 4), std::sqrt(0.125));
}

TEST(OperatorNorms, SplitSumsToVariance) {
  for (const auto& c : kStandardParams) {
    const KernelParams p = validate_params(c.a, c.b);
    for (std::size_t n = 1; n <= 60; ++n) {
      EXPECT_NEAR(lowpass_norm_squared(p, n) + highpass_norm_squared(p, n), 1.0 / (1.0 - c.a),
                  2 * std::numeric_limits<double>::epsilon() / (1.0 - c.a));
    }
  }
}

TEST(OperatorNorms, MonotoneLimits) {
  for (const auto& c : kStandardParams) {
    const KernelParams p = validate_params(c.a, c.b);
    double prev_lo = 0.0;
    double prev_hi = std::numeric_limits<double>::infinity();
    for (std::size_t n = 1; n <= 400; ++n) {
      EXPECT_GE(lowpass_norm(p, n), prev_lo);
      EXPECT_LT(highpass_norm(p, n), prev_hi);
      prev_lo = lowpass_norm(p, n);
      prev_hi = highpass_norm(p, n);
    }
    EXPECT_NEAR(prev_lo, embedding_norm(p), 1e-12);
    EXPECT_LT(prev_hi, 1e-8);
  }
}

TEST(CndApproximant, ZeroFunctionNorms) {
  for (const auto& c : kStandardParams) {
    const KernelParams p = validate_params(c.a, c.b);
    const RkhsFunction zero = RkhsFunction::zero(p);
    EXPECT_NEAR(cnd_approximant(zero, 0).norm_squared(), 2.0 / (1.0 - c.a), 1e-14 / (1.0 - c.a));
    for (std::size_t n = 0; n <= 20; ++n) {
      const double closed = 2.0 * std::pow(c.a, static_cast<double>(n)) / (1.0 - c.a);
      // Direct partial summation of 2 a^k, k >= n, until the terms underflow.
      long double direct = 0.0L;
      for (std::size_t k = n; k < n + 4000; ++k) {
        direct += 2.0L * std::pow(static_cast<long double>(c.a), static_cast<long double>(k));
      }
      const double dist = distance_squared(zero, cnd_approximant(zero, n));
      EXPECT_NEAR(dist, closed, 1e-14 * closed);
      EXPECT_NEAR(dist, static_cast<double>(direct), 1e-12 * closed);
    }
  }
}

TEST(CndApproximant, GeometricDecayWithRatioA) {
  Gen gen(17);
  for (const auto& c : kStandardParams) {
    const KernelParams p = validate_params(c.a, c.b);
    const RkhsFunction f = random_function(p, 5, gen);
    for (std::size_t n = 5; n < 25; ++n) {
      const double d0 = distance_squared(f, cnd_approximant(f, n));
      const double d1 = distance_squared(f, cnd_approximant(f, n + 1));
      EXPECT_NEAR(d1 / d0, c.a, 1e-14);
    }
  }
}

TEST(CndApproximant, DistanceMatchesCoefficientSum) {
  Gen gen(18);
  const KernelParams p = validate_params(0.7, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = static_cast<std::size_t>(gen.integer(1, 12));
    const RkhsFunction f = random_function(p, m, gen);
    const std::size_t n = static_cast<std::size_t>(gen.integer(0, 15));
    long double direct = 0.0L;
    for (std::size_t k = n; k < 5000; ++k) {
      const long double tail = std::pow(static_cast<long double>(p.a()), k / 2.0L);
      const long double fc = k < m ? f.cos_coeffs()[k] : 0.0L;
      const long double fd = k < m ? f.sin_coeffs()[k] : 0.0L;
      direct += (fc - tail) * (fc - tail) + (fd - tail) * (fd - tail);
    }
    const double dist = distance_squared(f, cnd_approximant(f, n));
    EXPECT_NEAR(dist, static_cast<double>(direct), 1e-12 * std::max(1.0, dist));
  }
}

TEST(CndApproximant, EvaluationDecomposition) {
  Gen gen(19);
  for (const auto& c : kStandardParams) {
    const KernelParams p = validate_params(c.a, c.b);
    const RkhsFunction f = random_function(p, 4, gen);
    for (std::size_t n : {0u, 2u, 4u, 7u}) {
      const TailedRkhsFunction g = cnd_approximant(f, n);
      for (int i = 0; i < 10; ++i) {
        const double x = gen.uniform(-1.0, 1.0);
        const double head = evaluate(project_low(f, n), x);
        const double cos_tail = eval_weierstrass(p, x, 1e-15) - eval_weierstrass_terms(p, x, n);
        const double full = eval_complex_weierstrass(c.a, static_cast<double>(c.b),
                                                     PiMultiple{x}, 1e-15)
                                .imag();
        double sine_head = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const RkhsFunction s = kernel_section(p, x, k + 1);
          sine_head += std::sqrt(std::pow(c.a, static_cast<double>(k))) * s.sin_coeffs()[k];
        }
        EXPECT_NEAR(evaluate(g, x), head + cos_tail + (full - sine_head), 1e-9);
      }
    }
  }
}

TEST(CndApproximant, TailedHeadLengthChecked) {
  const KernelParams p = validate_params(0.5, 3);
  EXPECT_THROW(TailedRkhsFunction(make_function(p, {1.0}, {0.0}), 2), std::invalid_argument);
}

}  // namespace
}  // namespace wfk
