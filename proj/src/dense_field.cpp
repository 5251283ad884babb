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


#include "cliffatlas/dense_field.hpp"

#include <algorithm>
#include <limits>

#include "cliffatlas/number_theory.hpp"

namespace cliffatlas {

namespace {

std::vector<std::vector<std::int64_t>> power_table(long n, int deg, long count) {
  auto phi = nt::cyclotomic_polynomial(n);
  std::vector<std::vector<std::int64_t>> table;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(deg), 0);
  cur[0] = 1;
  if (deg == 0) return table;
  for (long k = 0; k < count; ++k) {
    table.push_back(cur);
    std::int64_t top = cur[static_cast<std::size_t>(deg - 1)];
    for (int j = deg - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (int j = 0; j < deg; ++j) cur[j] -= top * phi[static_cast<std::size_t>(j)];
  }
  return table;
}

// Power-basis coefficients of `value` in Q(zeta_n), as rationals.
std::vector<Rational> power_coefficients(
    const Cyclotomic& value, long n, int deg,
    const std::vector<std::vector<std::int64_t>>& power) {
  std::vector<Rational> out(static_cast<std::size_t>(deg));
  for (const auto& [k, q] : value.coefficients_at(n)) {
    const auto& row = power[static_cast<std::size_t>(k)];
    for (int j = 0; j < deg; ++j) {
      if (row[j] != 0) out[j] += q * Rational(row[j]);
    }
  }
  return out;
}

}  // namespace

FieldContext::FieldContext(long conductor, std::int64_t scale)
    : n_(conductor), deg_(static_cast<int>(nt::totient(conductor))), scale_(scale) {
  if (scale < 1) throw std::domain_error("FieldContext: scale must be positive");
  phi_ = nt::cyclotomic_polynomial(n_);
  power_ = power_table(n_, deg_, std::max<long>(n_, 2L * deg_ - 1));
  conj_.resize(static_cast<std::size_t>(deg_));
  for (int j = 0; j < deg_; ++j) conj_[j] = power_[nt::mod(-j, n_)];
}

void FieldContext::encode(const Cyclotomic& value, std::int64_t* out) const {
  if (n_ % value.conductor() != 0) {
    throw std::domain_error("FieldContext: value outside the field");
  }
  auto coeffs = power_coefficients(value, n_, deg_, power_);
  mpz_class need = 1;
  for (auto& c : coeffs) {
    c *= Rational(scale_);
    if (!c.is_integer()) need = lcm(need, c.denominator());
  }
  if (need != 1) throw ScaleError(need.get_si());
  for (int j = 0; j < deg_; ++j) {
    const mpz_class& z = coeffs[j].numerator();
    if (!z.fits_slong_p()) throw std::overflow_error("FieldContext: coefficient overflow");
    out[j] = z.get_si();
  }
}

Cyclotomic FieldContext::decode(const std::int64_t* in) const {
  std::vector<Cyclotomic::Term> terms;
  for (int j = 0; j < deg_; ++j) {
    if (in[j] != 0) terms.emplace_back(j, Rational(in[j], scale_));
  }
  return Cyclotomic::from_terms(n_, terms);
}

void FieldContext::multiply_accumulate(const std::int64_t* a, const std::int64_t* b,
                                       __int128* acc) const {
  for (int i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    __int128 ai = a[i];
    for (int j = 0; j < deg_; ++j) acc[i + j] += ai * b[j];
  }
}

void FieldContext::reduce(__int128* acc) const {
  for (int k = 2 * deg_ - 2; k >= deg_; --k) {
    __int128 c = acc[k];
    if (c == 0) continue;
    acc[k] = 0;
    for (int j = 0; j < deg_; ++j) acc[k - deg_ + j] -= c * phi_[j];
  }
}

void FieldContext::finish(__int128* acc, std::int64_t* out) const {
  reduce(acc);
  bool exact = true;
  for (int j = 0; j < deg_; ++j) exact = exact && acc[j] % scale_ == 0;
  if (!exact) {
    std::int64_t g = scale_;
    for (int j = 0; j < deg_; ++j) {
      auto r = static_cast<std::int64_t>(acc[j] % scale_);
      g = nt::gcd(g, r);
    }
    throw ScaleError(scale_ / g);
  }
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  for (int j = 0; j < deg_; ++j) {
    __int128 q = acc[j] / scale_;
    if (q < lo || q > hi) throw std::overflow_error("FieldContext: coefficient overflow");
    out[j] = static_cast<std::int64_t>(q);
  }
}

void FieldContext::conjugate(const std::int64_t* in, std::int64_t* out) const {
  std::fill(out, out + deg_, 0);
  for (int j = 0; j < deg_; ++j) {
    if (in[j] == 0) continue;
    const auto& row = conj_[j];
    for (int k = 0; k < deg_; ++k) out[k] += in[j] * row[k];
  }
}

std::vector<std::int64_t> FieldContext::one() const {
  std::vector<std::int64_t> v(static_cast<std::size_t>(deg_), 0);
  v[0] = scale_;
  return v;
}

std::int64_t FieldContext::required_scale(long conductor,
                                          const std::vector<Cyclotomic>& values) {
  int deg = static_cast<int>(nt::totient(conductor));
  auto power = power_table(conductor, deg, std::max<long>(conductor, 2L * deg - 1));
  mpz_class need = 1;
  for (const auto& v : values) {
    for (const auto& c : power_coefficients(v, conductor, deg, power)) {
      need = lcm(need, c.denominator());
    }
  }
  if (!need.fits_slong_p()) throw std::overflow_error("FieldContext: scale overflow");
  return need.get_si();
}

}  // namespace cliffatlas
