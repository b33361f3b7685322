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

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "wfk/errors.hpp"
#include "wfk/fractal.hpp"
#include "wfk/kernel.hpp"
#include "wfk/rkhs.hpp"

namespace wfk {
namespace {

// |w(h) - w(0)|/h for a = 0.5, b = 3, h = 3^-m rounded to double, from
// extended-precision evaluation.
const std::vector<double> kQuotientsAtOrigin{
    7.4999999995987971, 11.79276641232502,  17.87171395945507,  26.868486786339969,
    40.323037724678466, 60.491325852344947, 90.739245205547313, 136.10961995095543,
    204.16468063421198, 306.24710452262653, 459.37068465992169, 689.05603626591696};

TEST(QuotientTable, AffineIsExact) {
  const Evaluator line = [](double x) { return x + 0.25; };
  for (const QuotientRow& row : diff_quotient_table(line, 0.3, 20, 3.0)) {
    EXPECT_NEAR(row.max_quotient, 1.0, 1e-6);
  }
  const Evaluator steep = [](double x) { return -4.0 * x; };
  for (const QuotientRow& row : diff_quotient_table(steep, -0.7, 12, 2.0)) {
    EXPECT_NEAR(row.max_quotient, 4.0, 1e-9);
  }
}

TEST(QuotientTable, WeierstrassAtOrigin) {
  const KernelParams p = validate_params(0.5, 3);
  const Evaluator w = [&](double x) { return eval_weierstrass(p, x, 1e-14); };
  const auto table = diff_quotient_table(w, 0.0, 12, 3.0);
  ASSERT_EQ(table.size(), kQuotientsAtOrigin.size());
  for (std::size_t m = 0; m < table.size(); ++m) {
    EXPECT_NEAR(table[m].step, std::pow(3.0, -static_cast<double>(m + 1)), 1e-17);
    EXPECT_NEAR(table[m].max_quotient, kQuotientsAtOrigin[m], 1e-8 * kQuotientsAtOrigin[m]);
  }
  for (std::size_t m = table.size() - 4; m < table.size(); ++m) {
    const double ratio = table[m].max_quotient / table[m - 1].max_quotient;
    EXPECT_GE(ratio, 1.2);
    EXPECT_LE(ratio, 1.9);
  }
  for (std::size_t m = table.size() - 5; m < table.size(); ++m) {
    EXPECT_GT(table[m].max_quotient, table[m - 1].max_quotient);
  }
}

TEST(QuotientTable, TrigPolynomialConvergesToDerivative) {
  const KernelParams p = validate_params(0.5, 3);
  const RkhsFunction f = make_function(p, {0.4, -1.1, 0.7}, {0.9, 0.3, -0.2});
  const Evaluator ev = [&](double x) { return evaluate(f, x); };
  const double pi = std::numbers::pi;
  const auto derivative = [&](double x) {
    double s = 0.0;
    for (std::size_t n = 0; n < f.size(); ++n) {
      const double k = std::pow(3.0, static_cast<double>(n)) * pi;
      const double scale = std::pow(0.5, static_cast<double>(n) / 2.0);
      s += scale * k * (-f.cos_coeffs()[n] * std::sin(k * x) + f.sin_coeffs()[n] * std::cos(k * x));
    }
    return std::abs(s);
  };
  for (double x : {-0.61, 0.0, 0.2, 0.77}) {
    const auto table = diff_quotient_table(ev, x, 18, 3.0);
    const double target = derivative(x);
    double prev_err = std::abs(table[6].max_quotient - target);
    for (std::size_t m = 7; m < table.size(); ++m) {
      const double err = std::abs(table[m].max_quotient - target);
      EXPECT_LE(err, prev_err * 0.5 + 1e-6);
      prev_err = err;
    }
    EXPECT_NEAR(table.back().max_quotient, target, 1e-5 * std::max(1.0, target));
  }
}

TEST(QuotientTable, Errors) {
  const Evaluator line = [](double x) { return x; };
  EXPECT_THROW(diff_quotient_table(line, 0.0, 0, 3.0), DomainError);
  EXPECT_THROW(diff_quotient_table(line, 0.0, 5, 1.0), DomainError);
}

TEST(Holder, ExponentForHalfAndThree) {
  const KernelParams p = validate_params(0.5, 3);
  const HolderProbe probe = holder_probe(p, 12);
  EXPECT_NEAR(probe.fitted_exponent, std::log(2.0) / std::log(3.0), 0.05);
  EXPECT_NEAR(p.holder_exponent(), 0.6309, 1e-4);
  EXPECT_GT(probe.fitted_exponent, 0.0);
  EXPECT_LE(probe.fitted_exponent, 1.0);
  EXPECT_GT(probe.tail_quotient_ratio(), kDivergentRatio);
  EXPECT_EQ(probe.scales.size(), 12u);
  EXPECT_EQ(probe.fit_from, 6);
}

TEST(Holder, BoundaryCaseAbEqualsOne) {
  const KernelParams p = validate_params(1.0 / 3.0, 3);
  const HolderProbe probe = holder_probe(p, 12);
  EXPECT_NEAR(probe.fitted_exponent, 1.0, 0.1);
}

TEST(Holder, ExponentsAcrossParameters) {
  for (const auto& [a, b] : std::vector<std::pair<double, long long>>{{0.7, 3}, {0.3, 5}}) {
    const KernelParams p = validate_params(a, b);
    const HolderProbe probe = holder_probe(p, b == 5 ? 9 : 12);
    EXPECT_GT(probe.fitted_exponent, 0.0);
    EXPECT_LE(probe.fitted_exponent, 1.0);
    EXPECT_NEAR(probe.fitted_exponent, p.holder_exponent(), 0.1) << a;
  }
}

TEST(Holder, FiniteTruncationIsSmooth) {
  const KernelParams p = validate_params(0.5, 3);
  const Evaluator partial = [&](double x) { return eval_weierstrass_terms(p, x, 6); };
  const HolderProbe probe = holder_probe(partial, 3.0, 14);
  EXPECT_LT(probe.tail_quotient_ratio(), kSmoothRatio);
  EXPECT_NEAR(probe.fitted_exponent, 1.0, 0.05);
}

TEST(Holder, CndApproximantDiverges) {
  // Any f_N carries the tail a^{n/2}, so its quotients keep growing.
  const KernelParams p = validate_params(0.5, 3);
  const RkhsFunction f = make_function(p, {0.3, 0.2}, {-0.1, 0.4});
  const TailedRkhsFunction g = cnd_approximant(f, 3);
  const Evaluator ev = [&](double x) { return evaluate(g, x, 1e-13); };
  const HolderProbe probe = holder_probe(ev, 3.0, 12, 128, 4);
  EXPECT_GT(probe.tail_quotient_ratio(), kDivergentRatio);
  const auto table = diff_quotient_table(ev, 0.0, 12, 3.0);
  for (std::size_t m = table.size() - 5; m < table.size(); ++m) {
    EXPECT_GT(table[m].max_quotient, table[m - 1].max_quotient);
  }
}

TEST(Holder, DeterministicForSeed) {
  const KernelParams p = validate_params(0.5, 3);
  const HolderProbe a = holder_probe(p, 8, 64, 5);
  const HolderProbe b = holder_probe(p, 8, 64, 5);
  EXPECT_EQ(a.max_increments, b.max_increments);
  EXPECT_EQ(a.fitted_exponent, b.fitted_exponent);
}

TEST(Holder, Errors) {
  const KernelParams p = validate_params(0.5, 3);
  EXPECT_THROW(holder_probe(p, 2), DomainError);
  EXPECT_THROW(holder_probe(p, 60), NumericError);
}

TEST(BoxDimension, AffineControl) {
  const Evaluator line = [](double x) { return 0.3 * x - 0.1; };
  BoxCountOptions options;
  const DimensionEstimate est = box_dimension(line, options);
  EXPECT_NEAR(est.dimension, 1.0, 0.05);
}

TEST(BoxDimension, SteepAffineControl) {
  const Evaluator line = [](double x) { return 1.7 * x; };
  BoxCountOptions options;
  options.samples_per_column = 64;
  const DimensionEstimate est = box_dimension(line, options);
  EXPECT_NEAR(est.dimension, 1.0, 0.05);
}

TEST(BoxDimension, NinetyHundredthsAndSeven) {
  const KernelParams p = validate_params(0.9, 7);
  BoxCountOptions options;
  options.m_min = 5;
  options.m_max = 12;
  const DimensionEstimate est = box_dimension(p, options);
  EXPECT_NEAR(graph_dimension_formula(p), 1.946, 5e-4);
  EXPECT_NEAR(est.dimension, graph_dimension_formula(p), 0.1);
  EXPECT_LE(est.evaluations, 20'000'000u);
}

TEST(BoxDimension, HalfAndThree) {
  const KernelParams p = validate_params(0.5, 3);
  const DimensionEstimate est = box_dimension(p, 5, 12, 512);
  EXPECT_NEAR(graph_dimension_formula(p), 1.369, 5e-4);
  EXPECT_NEAR(est.dimension, graph_dimension_formula(p), 0.15);
}

TEST(BoxDimension, CountsAndRange) {
  const KernelParams p = validate_params(0.7, 3);
  const DimensionEstimate est = box_dimension(p, 4, 10, 128);
  ASSERT_EQ(est.counts.size(), 7u);
  for (std::size_t i = 1; i < est.counts.size(); ++i) {
    EXPECT_GE(est.counts[i], est.counts[i - 1]);
    EXPECT_LT(est.scales[i], est.scales[i - 1]);
  }
  EXPECT_GE(est.dimension, 1.0);
  EXPECT_LE(est.dimension, 2.0);
}

TEST(BoxDimension, Errors) {
  const KernelParams p = validate_params(0.5, 3);
  EXPECT_THROW(box_dimension(p, 2, 8, 64), DomainError);
  EXPECT_THROW(box_dimension(p, 8, 8, 64), DomainError);
  EXPECT_THROW(box_dimension(p, 5, 15, 64), DomainError);
  EXPECT_THROW(box_dimension(p, 5, 10, 2), DomainError);
  BoxCountOptions options;
  options.max_evaluations = 1000;
  EXPECT_THROW(box_dimension(p, options), DomainError);
}

}  // namespace
}  // namespace wfk
