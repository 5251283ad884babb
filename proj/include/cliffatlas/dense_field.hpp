// Copyright 2026 The cliffatlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cliffatlas/cyclotomic.hpp"

namespace cliffatlas {

/// Raised when a value does not fit the current fixed denominator; the
/// caller rebuilds its context with `scale() * factor`.
class ScaleError : public std::runtime_error {
 public:
  explicit ScaleError(std::int64_t factor)
      : std::runtime_error("dense field: denominator exceeded"), factor_(factor) {}
  std::int64_t factor() const { return factor_; }

 private:
  std::int64_t factor_;
};

/**
 * Fixed cyclotomic field Q(zeta_N) in the power basis modulo Phi_N, with all
 * values sharing one denominator D. An element is `degree()` int64
 * numerators; the value is sum_j num[j] / D * zeta_N^j.
 *
 * For a fixed (N, D) the representation is unique, so the raw numerators are
 * a valid hash key. This is the workhorse for closing groups with tens of
 * thousands of elements.
 */
class FieldContext {
 public:
  FieldContext(long conductor, std::int64_t scale);

  long conductor() const { return n_; }
  int degree() const { return deg_; }
  std::int64_t scale() const { return scale_; }

  /// Writes the numerators of `value`; throws ScaleError if D * value is
  /// not integral in the power basis.
  void encode(const Cyclotomic& value, std::int64_t* out) const;
  Cyclotomic decode(const std::int64_t* in) const;

  /// Accumulates the unscaled product a*b (degree 2*deg-1) into `acc`.
  void multiply_accumulate(const std::int64_t* a, const std::int64_t* b,
                           __int128* acc) const;
  /// Reduces an accumulator modulo Phi_N in place (degree < deg afterwards).
  void reduce(__int128* acc) const;
  /// Reduces an accumulator modulo Phi_N, divides by D, and writes the result.
  void finish(__int128* acc, std::int64_t* out) const;

  void conjugate(const std::int64_t* in, std::int64_t* out) const;

  /// Numerators of the rational integer 1.
  std::vector<std::int64_t> one() const;

  /// Smallest denominator for which every value in `values` is encodable.
  static std::int64_t required_scale(long conductor,
                                     const std::vector<Cyclotomic>& values);

 private:
  long n_;
  int deg_;
  std::int64_t scale_;
  std::vector<std::int64_t> phi_;
  // x^k mod Phi_N for k in [0, max(N, 2*deg - 1)).
  std::vector<std::vector<std::int64_t>> power_;
  // conj_[j] = numerator vector of zeta^(-j) for basis index j < deg.
  std::vector<std::vector<std::int64_t>> conj_;
};

}  // namespace cliffatlas
