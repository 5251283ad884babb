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


// Independent reference computations used to derive expected values.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iterator>
#include <numbers>
#include <random>
#include <vector>

#include "cliffatlas/cyclotomic.hpp"
#include "cliffatlas/group.hpp"

namespace cliffatlas::oracle {

using Complex = std::complex<double>;
using DenseMatrix = std::vector<std::vector<Complex>>;

/// A random cyclotomic value with its floating-point value computed
/// independently of the exact arithmetic.
struct CyclotomicSample {
  Cyclotomic exact;
  Complex approx;
};

inline CyclotomicSample random_cyclotomic(std::mt19937_64& rng, bool nonzero = false) {
  static const long conductors[] = {1,  2,  3,  4,  5,  6,  7,  8,  12, 15,
                                    20, 24, 28, 35, 40, 56, 60, 84, 840};
  std::uniform_int_distribution<std::size_t> pick_n(0, std::size(conductors) - 1);
  std::uniform_int_distribution<int> pick_terms(1, 3);
  std::uniform_int_distribution<long> pick_num(-5, 5);
  std::uniform_int_distribution<long> pick_den(1, 4);
  for (;;) {
    const long n = conductors[pick_n(rng)];
    std::uniform_int_distribution<long> pick_k(0, n - 1);
    CyclotomicSample s{Cyclotomic(0), Complex(0)};
    const int terms = pick_terms(rng);
    for (int t = 0; t < terms; ++t) {
      const long k = pick_k(rng);
      const long num = pick_num(rng);
      const long den = pick_den(rng);
      s.exact += Cyclotomic(Rational(num, den)) * Cyclotomic::root_of_unity(n, k);
      const double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      s.approx += static_cast<double>(num) / static_cast<double>(den) * std::polar(1.0, angle);
    }
    if (!nonzero || !s.exact.is_zero()) return s;
  }
}

inline bool approx_equal(const Cyclotomic& a, Complex b) {
  return std::abs(a.to_complex() - b) < 1e-8;
}

/// Haar-random unitary of size n: Gram-Schmidt on a complex Gaussian matrix.
inline DenseMatrix haar_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  DenseMatrix cols(static_cast<std::size_t>(n), std::vector<Complex>(static_cast<std::size_t>(n)));
  for (auto& col : cols) {
    for (auto& x : col) x = Complex(normal(rng), normal(rng));
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex dot = 0;
      for (std::size_t r = 0; r < cols[j].size(); ++r) dot += std::conj(cols[k][r]) * cols[j][r];
      for (std::size_t r = 0; r < cols[j].size(); ++r) cols[j][r] -= dot * cols[k][r];
    }
    double norm = 0;
    for (const auto& x : cols[j]) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (auto& x : cols[j]) x /= norm;
  }
  return cols;
}

/// Monte-Carlo estimates of E|tr U|^(2t), t = 1, 2, 3, over Haar U(n).
inline std::array<double, 3> haar_trace_moments(int n, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::array<double, 3> sums{0, 0, 0};
  for (int s = 0; s < samples; ++s) {
    DenseMatrix u = haar_unitary(n, rng);
    Complex tr = 0;
    for (std::size_t k = 0; k < u.size(); ++k) tr += u[k][k];
    const double a = std::norm(tr);
    sums[0] += a;
    sums[1] += a * a;
    sums[2] += a * a * a;
  }
  for (auto& x : sums) x /= samples;
  return sums;
}

/// Number of subgroups H with n < H < g, found by testing every union of
/// cosets of n for closure. Only for small indices.
inline std::size_t brute_force_intermediate_count(const MatrixGroup& g, const MatrixGroup& n) {
  const std::vector<std::uint32_t> label = g.coset_labels(n);
  std::uint32_t index = 0;
  for (auto l : label) index = std::max(index, l + 1);
  if (index > 20) throw std::invalid_argument("index too large for brute force");
  std::vector<std::uint32_t> rep(index);
  for (std::uint32_t e = static_cast<std::uint32_t>(label.size()); e-- > 0;) rep[label[e]] = e;
  const std::uint32_t identity_coset = label[MatrixGroup::identity_index()];
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << index); ++mask) {
    if (!((mask >> identity_coset) & 1u)) continue;
    bool closed = true;
    for (std::uint32_t a = 0; a < index && closed; ++a) {
      if (!((mask >> a) & 1u)) continue;
      for (std::uint32_t b = 0; b < index; ++b) {
        if (!((mask >> b) & 1u)) continue;
        if (!((mask >> label[g.mul(rep[a], rep[b])]) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    const int size = __builtin_popcount(mask);
    if (closed && size > 1 && static_cast<std::uint32_t>(size) < index) ++count;
  }
  return count;
}

/// Sum over g of |tr g|^2, in floating point.
inline double trace_norm_sum(const MatrixGroup& g) {
  double sum = 0;
  for (std::uint32_t k = 0; k < g.order(); ++k) sum += std::norm(g.element(k).trace().to_complex());
  return sum;
}

}  // namespace cliffatlas::oracle
