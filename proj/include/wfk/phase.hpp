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

#ifndef WFK_PHASE_HPP
#define WFK_PHASE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace wfk {

/**
 * Exact phase reduction for lacunary series with an integer base.
 *
 * For a finite double x and integer base b, successive calls to next() return
 * t_n = (b^n * x) mod 2 in [0, 2) for n = 0, 1, 2, ..., so that
 * cos(b^n pi x) = cos(pi t_n). The reduction is carried out in modular integer
 * arithmetic on the mantissa of x, so t_n is correct to one rounding no matter
 * how large b^n x gets.
 */
class PhaseSequence {
 public:
  PhaseSequence(double x, std::uint64_t base);

  /// Phase of the current term; advances to the next power of the base.
  double next();

 private:
  double to_phase(const std::vector<std::uint64_t>& residue) const;

  std::uint64_t base_;
  std::uint64_t mantissa_ = 0;
  bool negative_ = false;
  bool zero_ = false;
  // Reduction modulus is 2^bits_.
  int bits_ = 0;
  double scale_ = 0.0;
  std::uint64_t mask_ = 0;
  std::uint64_t power_ = 1;                 // single-limb path
  std::vector<std::uint64_t> power_limbs_;  // multi-limb path (|x| < 2^-11)
  std::vector<std::uint64_t> scratch_;
};

/// cos(pi t) and sin(pi t) for a phase t in (-2, 2).
double cos_pi(double t);
double sin_pi(double t);

/**
 * cos(pi q / 2^p) for integer q in [0, 2^(p+1)) by a two-level table split;
 * used by the dyadic-grid evaluators.
 */
class DyadicCosTable {
 public:
  explicit DyadicCosTable(int p);

  int p() const { return p_; }
  std::uint64_t modulus_mask() const { return mask_; }

  double cos(std::uint64_t q) const {
    const std::size_t hi = static_cast<std::size_t>(q >> split_);
    const std::size_t lo = static_cast<std::size_t>(q & lo_mask_);
    return cos_hi_[hi] * cos_lo_[lo] - sin_hi_[hi] * sin_lo_[lo];
  }
  double sin(std::uint64_t q) const {
    const std::size_t hi = static_cast<std::size_t>(q >> split_);
    const std::size_t lo = static_cast<std::size_t>(q & lo_mask_);
    return sin_hi_[hi] * cos_lo_[lo] + cos_hi_[hi] * sin_lo_[lo];
  }

 private:
  int p_;
  int split_;
  std::uint64_t mask_;
  std::uint64_t lo_mask_;
  std::vector<double> cos_hi_, sin_hi_, cos_lo_, sin_lo_;
};

}  // namespace wfk

#endif  // WFK_PHASE_HPP
