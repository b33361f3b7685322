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

#include "wfk/phase.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "wfk/errors.hpp"

namespace wfk {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// value <- value * factor mod 2^(64*(limbs-1) + bits(top_mask)).
void mul_mod(std::vector<std::uint64_t>& value, std::uint64_t factor,
             std::uint64_t top_mask) {
  u128 carry = 0;
  for (auto& limb : value) {
    const u128 prod = static_cast<u128>(limb) * factor + carry;
    limb = static_cast<std::uint64_t>(prod);
    carry = prod >> 64;
  }
  value.back() &= top_mask;
}

}  // namespace

PhaseSequence::PhaseSequence(double x, std::uint64_t base) : base_(base) {
  if (!std::isfinite(x)) throw DomainError("phase reduction needs a finite argument");
  if (x == 0.0) {
    zero_ = true;
    return;
  }
  negative_ = x < 0.0;
  int exponent = 0;
  const double frac = std::frexp(std::fabs(x), &exponent);
  // |x| = mantissa * 2^(exponent - 53), mantissa an odd integer after stripping.
  std::uint64_t mantissa = static_cast<std::uint64_t>(std::ldexp(frac, 53));
  int exp2 = exponent - 53;
  const int tz = std::countr_zero(mantissa);
  mantissa >>= tz;
  exp2 += tz;
  if (exp2 >= 1) {
    // x is an even integer: every phase is 0 mod 2.
    zero_ = true;
    return;
  }
  mantissa_ = mantissa;
  bits_ = 1 - exp2;
  scale_ = std::ldexp(1.0, 1 - bits_);
  if (bits_ <= 64) {
    mask_ = low_mask(bits_);
  } else {
    const std::size_t limbs = static_cast<std::size_t>((bits_ + 63) / 64);
    power_limbs_.assign(limbs, 0);
    power_limbs_[0] = 1;
    scratch_.resize(limbs);
    mask_ = low_mask(bits_ - 64 * static_cast<int>(limbs - 1));
  }
}

double PhaseSequence::to_phase(const std::vector<std::uint64_t>& residue) const {
  const std::size_t n = residue.size();
  const int top_shift = 64 * static_cast<int>(n - 1) + 1 - bits_;
  double t = std::ldexp(static_cast<double>(residue[n - 1]), top_shift);
  if (n >= 2) t += std::ldexp(static_cast<double>(residue[n - 2]), top_shift - 64);
  return t;
}

double PhaseSequence::next() {
  if (zero_) return 0.0;
  double t = 0.0;
  if (power_limbs_.empty()) {
    // Arithmetic mod 2^64 is exact modulo 2^bits_ for bits_ <= 64.
    const std::uint64_t residue = (power_ * mantissa_) & mask_;
    t = static_cast<double>(residue) * scale_;
    power_ *= base_;
  } else {
    scratch_ = power_limbs_;
    mul_mod(scratch_, mantissa_, mask_);
    t = to_phase(scratch_);
    mul_mod(power_limbs_, base_, mask_);
  }
  if (t >= 2.0) t = 0.0;  // rounding of a residue just below 2^bits_
  if (negative_ && t != 0.0) t = 2.0 - t;
  return t;
}

double cos_pi(double t) {
  if (t > 1.0) t -= 2.0;
  if (t < -1.0) t += 2.0;
  return std::cos(std::numbers::pi * t);
}

double sin_pi(double t) {
  if (t > 1.0) t -= 2.0;
  if (t < -1.0) t += 2.0;
  return std::sin(std::numbers::pi * t);
}

DyadicCosTable::DyadicCosTable(int p) : p_(p) {
  if (p < 0 || p > 60) throw DomainError("dyadic table exponent out of range");
  const int bits = p + 1;
  split_ = (bits + 1) / 2;
  mask_ = low_mask(bits);
  lo_mask_ = low_mask(split_);
  const std::size_t n_hi = std::size_t{1} << (bits - split_);
  const std::size_t n_lo = std::size_t{1} << split_;
  cos_hi_.resize(n_hi);
  sin_hi_.resize(n_hi);
  cos_lo_.resize(n_lo);
  sin_lo_.resize(n_lo);
  for (std::size_t k = 0; k < n_hi; ++k) {
    const double t = std::ldexp(static_cast<double>(k), split_ - p);
    cos_hi_[k] = cos_pi(t);
    sin_hi_[k] = sin_pi(t);
  }
  for (std::size_t k = 0; k < n_lo; ++k) {
    const double t = std::ldexp(static_cast<double>(k), -p);
    cos_lo_[k] = cos_pi(t);
    sin_lo_[k] = sin_pi(t);
  }
}

}  // namespace wfk
