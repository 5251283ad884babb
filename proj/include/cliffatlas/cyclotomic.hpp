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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffatlas/rational.hpp"

namespace cliffatlas {

/**
 * Exact element of a cyclotomic field Q(zeta_N).
 *
 * Values are stored as rational coefficients on the Zumbroich basis of
 * Q(zeta_N), where N is the smallest conductor containing the value. The
 * representation is canonical, so structural equality is field equality and
 * hashing is well defined. Values are immutable once built.
 */
class Cyclotomic {
 public:
  using Term = std::pair<long, Rational>;  // exponent of zeta_N, coefficient

  Cyclotomic() = default;
  Cyclotomic(long n) : Cyclotomic(Rational(n)) {}  // NOLINT
  Cyclotomic(const Rational& q);                   // NOLINT

  /// zeta_n^k.
  static Cyclotomic root_of_unity(long n, long k = 1);

  /// Sum of coeff * zeta_n^exponent over arbitrary (possibly repeated or
  /// non-basis) exponents.
  static Cyclotomic from_terms(long n, std::span<const Term> terms);

  /// Principal square root of d for d in {2, 3, 5, -3, -7}.
  static Cyclotomic sqrt_named(long d);

  long conductor() const { return conductor_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_rational() const { return conductor_ == 1; }
  std::optional<Rational> to_rational() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  Cyclotomic conj() const { return galois(-1); }
  /// Image under the automorphism zeta_N -> zeta_N^g, gcd(g, N) = 1.
  Cyclotomic galois(long g) const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inverse() const;
  /// Product of all Galois conjugates (a rational number).
  Rational norm() const;
  Cyclotomic pow(long e) const;

  /// Zumbroich coefficients of this value viewed in Q(zeta_n); the conductor
  /// must divide n. Entries are (basis exponent, coefficient), sorted.
  std::vector<Term> coefficients_at(long n) const;

  /// Canonical text form "c<N>:<k>=<num>/<den>,..." with ascending exponents.
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text);

  /// Human-oriented rendering such as "zeta8^3 - 1/2*zeta8".
  std::string pretty() const;
  /// Floating-point value, for debugging only.
  std::complex<double> to_complex() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor_ == b.conductor_ && a.terms_ == b.terms_;
  }
  std::size_t hash() const;

 private:
  long conductor_ = 1;
  std::vector<Term> terms_;  // sorted by exponent, nonzero coefficients
};

/// Exponents of the Zumbroich basis of Q(zeta_n), ascending.
std::vector<long> zumbroich_basis(long n);

inline Cyclotomic i_unit() { return Cyclotomic::root_of_unity(4, 1); }

}  // namespace cliffatlas

template <>
struct std::hash<cliffatlas::Cyclotomic> {
  std::size_t operator()(const cliffatlas::Cyclotomic& c) const noexcept {
    return c.hash();
  }
};
