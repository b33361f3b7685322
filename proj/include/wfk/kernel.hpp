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

#ifndef WFK_KERNEL_HPP
#define WFK_KERNEL_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "wfk/params.hpp"

namespace wfk {

/// w_{a,b}(x) = sum_n a^n cos(b^n pi x), truncated at truncation_terms(tol).
double eval_weierstrass(const KernelParams& params, double x,
                        double tol = kDefaultTol);

/// Partial sum of exactly `terms` terms of the cosine series.
double eval_weierstrass_terms(const KernelParams& params, double x,
                              std::size_t terms);

/// W(x, y) = w(x - y). The difference is reduced term by term from the exact
/// phases of x and y, so no rounding of x - y enters the high frequencies.
double eval_kernel(const KernelParams& params, double x, double y,
                   double tol = kDefaultTol);

double eval_kernel_terms(const KernelParams& params, double x, double y,
                         std::size_t terms);

struct KernelParts {
  double cosine = 0.0;  // sum a^n cos(b^n pi x) cos(b^n pi y)
  double sine = 0.0;    // sum a^n sin(b^n pi x) sin(b^n pi y)
};

/// Cosine/sine split W = C + S, each truncated at truncation_terms(tol).
KernelParts eval_parts(const KernelParams& params, double x, double y,
                       double tol = kDefaultTol);

/// An argument given in units of pi: PiMultiple{x} stands for pi * x.
struct PiMultiple {
  double value;
};

/**
 * Complex series sum_n r^n exp(i base^n x) with amplitude ratio r in (0, 1)
 * and real base > 1, truncated so that the modulus of the tail is <= tol.
 *
 * With a real argument the phase base^n * x is formed in double precision.
 * The PiMultiple overload reduces exactly when the base is an integer, and
 * realizes Re(sum_n a^n exp(i b^n pi x)) = w_{a,b}(x).
 */
std::complex<double> eval_complex_weierstrass(double amplitude_ratio, double base,
                                              double x, double tol = kDefaultTol);
std::complex<double> eval_complex_weierstrass(double amplitude_ratio, double base,
                                              PiMultiple x, double tol = kDefaultTol);

/// Mandelbrot's series sum_n r^(-K n) exp(i r^n x) for r > 1, 0 < K < 1.
std::complex<double> eval_mandelbrot(double r, double exponent, double x,
                                     double tol = kDefaultTol);

/**
 * Finite feature vector (a^{n/2} cos(b^n pi x), a^{n/2} sin(b^n pi x)) for
 * n = 0..terms-1, interleaved, so <phi(x), phi(y)> is the terms-term partial
 * sum of W(x, y).
 */
std::vector<double> feature_map(const KernelParams& params, double x,
                                std::size_t terms);

/// Writes feature_map(params, x, out.size()/2) into out without allocating.
void feature_map_into(const KernelParams& params, double x, std::span<double> out);

/// Kernel matrix over points of I with its truncation metadata.
struct GramMatrix {
  std::vector<double> points;
  Eigen::MatrixXd entries;
  double tol = kDefaultTol;
  std::size_t terms = 0;

  Eigen::Index dim() const { return entries.rows(); }

  /// Eigenvalues in increasing order.
  Eigen::VectorXd eigenvalues() const;
  double min_eigenvalue() const;

  /// Lowest admissible eigenvalue: -(dim * tol) - 1e-12 * ||G||_2.
  double psd_floor() const;
};

/**
 * G_ij = W(x_i, x_j) assembled as a product of feature maps, so G is a Gram
 * matrix up to rounding. Every entry is computed independently.
 *
 * Throws DomainError for an empty point list or points outside I.
 */
GramMatrix gram_matrix(const KernelParams& params, std::span<const double> points,
                       double tol = kDefaultTol);

/**
 * w evaluated on the dyadic grid x_j = -1 + j 2^-p for j in [first, last).
 *
 * Phases are exact integers modulo 2^(p+1); cosines come from a split table,
 * so the cost per term is a handful of flops. Requires 1 <= p <= 40 and
 * last <= 2^(p+1) + 1.
 */
std::vector<double> weierstrass_on_dyadic_grid(const KernelParams& params, int p,
                                               std::size_t first, std::size_t last,
                                               double tol = kDefaultTol);

}  // namespace wfk

#endif  // WFK_KERNEL_HPP
