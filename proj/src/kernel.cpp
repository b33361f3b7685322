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

#include "wfk/kernel.hpp"

#include <cmath>
#include <numbers>
#include <fmt/format.h>

#include "wfk/errors.hpp"
#include "wfk/phase.hpp"

namespace wfk {

namespace {

void check_finite(double x) {
  if (!std::isfinite(x)) throw DomainError("evaluation point must be finite");
}

// Sums weight_n * f(t_n) where t_n are the reduced phases of x.
template <typename Term>
double lacunary_sum(const KernelParams& params, double x, std::size_t terms,
                    Term term) {
  check_finite(x);
  PhaseSequence phases(x, params.b());
  double weight = 1.0;
  double sum = 0.0;
  for (std::size_t n = 0; n < terms; ++n) {
    sum += weight * term(phases.next());
    weight *= params.a();
  }
  return sum;
}

bool is_integer_base(double base) {
  return base == std::floor(base) && base < 0x1p63;
}

void check_complex_args(double amplitude_ratio, double base) {
  if (!(amplitude_ratio > 0.0 && amplitude_ratio < 1.0)) {
    throw DomainError(
        fmt::format("amplitude ratio {} must lie in (0, 1)", amplitude_ratio));
  }
  if (!(base > 1.0) || !std::isfinite(base)) {
    throw DomainError(fmt::format("base {} must be > 1", base));
  }
}

}  // namespace

double eval_weierstrass_terms(const KernelParams& params, double x,
                              std::size_t terms) {
  return lacunary_sum(params, x, terms, [](double t) { return cos_pi(t); });
}

double eval_weierstrass(const KernelParams& params, double x, double tol) {
  return eval_weierstrass_terms(params, x, truncation_terms(params, tol));
}

double eval_kernel_terms(const KernelParams& params, double x, double y,
                         std::size_t terms) {
  check_finite(x);
  check_finite(y);
  PhaseSequence px(x, params.b());
  PhaseSequence py(y, params.b());
  double weight = 1.0;
  double sum = 0.0;
  for (std::size_t n = 0; n < terms; ++n) {
    sum += weight * cos_pi(px.next() - py.next());
    weight *= params.a();
  }
  return sum;
}

double eval_kernel(const KernelParams& params, double x, double y, double tol) {
  return eval_kernel_terms(params, x, y, truncation_terms(params, tol));
}

KernelParts eval_parts(const KernelParams& params, double x, double y, double tol) {
  check_finite(x);
  check_finite(y);
  const std::size_t terms = truncation_terms(params, tol);
  PhaseSequence px(x, params.b());
  PhaseSequence py(y, params.b());
  KernelParts parts;
  double weight = 1.0;
  for (std::size_t n = 0; n < terms; ++n) {
    const double tx = px.next();
    const double ty = py.next();
    parts.cosine += weight * cos_pi(tx) * cos_pi(ty);
    parts.sine += weight * sin_pi(tx) * sin_pi(ty);
    weight *= params.a();
  }
  return parts;
}

std::complex<double> eval_complex_weierstrass(double amplitude_ratio, double base,
                                              double x, double tol) {
  check_complex_args(amplitude_ratio, base);
  check_finite(x);
  const std::size_t terms = geometric_terms(amplitude_ratio, tol);
  std::complex<double> sum{0.0, 0.0};
  double weight = 1.0;
  double power = 1.0;
  for (std::size_t n = 0; n < terms; ++n) {
    const double phase = power * x;
    if (!std::isfinite(phase)) {
      throw NumericError("phase base^n * x overflowed; use fewer terms");
    }
    sum += weight * std::complex<double>(std::cos(phase), std::sin(phase));
    weight *= amplitude_ratio;
    power *= base;
  }
  return sum;
}

std::complex<double> eval_complex_weierstrass(double amplitude_ratio, double base,
                                              PiMultiple x, double tol) {
  check_complex_args(amplitude_ratio, base);
  check_finite(x.value);
  if (!is_integer_base(base)) {
    return eval_complex_weierstrass(amplitude_ratio, base,
                                    std::numbers::pi * x.value, tol);
  }
  const std::size_t terms = geometric_terms(amplitude_ratio, tol);
  PhaseSequence phases(x.value, static_cast<std::uint64_t>(base));
  std::complex<double> sum{0.0, 0.0};
  double weight = 1.0;
  for (std::size_t n = 0; n < terms; ++n) {
    const double t = phases.next();
    sum += weight * std::complex<double>(cos_pi(t), sin_pi(t));
    weight *= amplitude_ratio;
  }
  return sum;
}

std::complex<double> eval_mandelbrot(double r, double exponent, double x, double tol) {
  if (!(r > 1.0)) throw DomainError(fmt::format("Mandelbrot base r={} must be > 1", r));
  if (!(exponent > 0.0 && exponent < 1.0)) {
    throw DomainError(fmt::format("Mandelbrot exponent K={} must lie in (0, 1)", exponent));
  }
  return eval_complex_weierstrass(std::pow(r, -exponent), r, x, tol);
}

void feature_map_into(const KernelParams& params, double x, std::span<double> out) {
  check_finite(x);
  PhaseSequence phases(x, params.b());
  const double root_a = std::sqrt(params.a());
  double scale = 1.0;
  for (std::size_t k = 0; k + 1 < out.size(); k += 2) {
    const double t = phases.next();
    out[k] = scale * cos_pi(t);
    out[k + 1] = scale * sin_pi(t);
    scale *= root_a;
  }
}

std::vector<double> feature_map(const KernelParams& params, double x,
                                std::size_t terms) {
  std::vector<double> phi(2 * terms);
  feature_map_into(params, x, phi);
  return phi;
}

Eigen::VectorXd GramMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(entries,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("symmetric eigensolver did not converge");
  }
  return solver.eigenvalues();
}

double GramMatrix::min_eigenvalue() const { return eigenvalues()(0); }

double GramMatrix::psd_floor() const {
  const Eigen::VectorXd ev = eigenvalues();
  const double norm = ev.cwiseAbs().maxCoeff();
  return -static_cast<double>(dim()) * tol - 1e-12 * norm;
}

GramMatrix gram_matrix(const KernelParams& params, std::span<const double> points,
                       double tol) {
  if (points.empty()) throw DomainError("Gram matrix needs at least one point");
  for (double x : points) {
    if (!in_unit_interval(x)) {
      throw DomainError(fmt::format("Gram point {} lies outside I = [-1, 1]", x));
    }
  }
  const std::size_t terms = truncation_terms(params, tol);
  const std::size_t n = points.size();
  const std::size_t width = 2 * terms;
  std::vector<double> features(n * width);
  for (std::size_t i = 0; i < n; ++i) {
    feature_map_into(params, points[i],
                     std::span<double>(features).subspan(i * width, width));
  }

  GramMatrix gram;
  gram.points.assign(points.begin(), points.end());
  gram.tol = tol;
  gram.terms = terms;
  gram.entries.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double* fi = features.data() + i * width;
    for (std::size_t j = 0; j <= i; ++j) {
      const double* fj = features.data() + j * width;
      double dot = 0.0;
      for (std::size_t k = 0; k < width; ++k) dot += fi[k] * fj[k];
      const auto ii = static_cast<Eigen::Index>(i);
      const auto jj = static_cast<Eigen::Index>(j);
      gram.entries(ii, jj) = dot;
      gram.entries(jj, ii) = dot;
    }
  }
  return gram;
}

std::vector<double> weierstrass_on_dyadic_grid(const KernelParams& params, int p,
                                               std::size_t first, std::size_t last,
                                               double tol) {
  if (p < 1 || p > 40) throw DomainError(fmt::format("dyadic exponent p={} out of range", p));
  const std::uint64_t half = std::uint64_t{1} << p;  // index of x = 0
  if (last < first || last > 2 * half + 1) {
    throw DomainError("dyadic grid index range out of bounds");
  }
  const std::size_t terms = truncation_terms(params, tol);
  const DyadicCosTable table(p);
  const std::uint64_t mask = table.modulus_mask();

  std::vector<double> values(last - first, 0.0);
  // Phase of term n at index j: b^n (j - 2^p) mod 2^(p+1), in units of pi 2^-p.
  std::uint64_t power = 1;
  double weight = 1.0;
  for (std::size_t n = 0; n < terms; ++n) {
    const std::uint64_t step = power & mask;
    std::uint64_t q = (step * (static_cast<std::uint64_t>(first) - half)) & mask;
    for (double& v : values) {
      v += weight * table.cos(q);
      q = (q + step) & mask;
    }
    power *= params.b();
    weight *= params.a();
  }
  return values;
}

}  // namespace wfk
