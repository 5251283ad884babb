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

#include "cliffatlas/number_theory.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cliffatlas::nt {

std::vector<PrimePower> factorize(long n) {
  if (n < 1) throw std::domain_error("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

long gcd(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

long totient(long n) {
  long t = n;
  for (const auto& pp : factorize(n)) t = t / pp.prime * (pp.prime - 1);
  return t;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long inverse_mod(long a, long m) {
  if (m == 1) return 0;
  long g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    long q = g / a1;
    long t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw std::domain_error("inverse_mod: not invertible");
  return mod(x, m);
}

long pow_mod(long base, long exp, long m) {
  long result = 1 % m;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = static_cast<long>((__int128)result * base % m);
    base = static_cast<long>((__int128)base * base % m);
    exp >>= 1;
  }
  return result;
}

namespace {

long multiplicative_order(long a, long m) {
  long x = mod(a, m), k = 1;
  while (x != 1 % m) {
    x = static_cast<long>((__int128)x * a % m);
    ++k;
  }
  return k;
}

// Lifts a unit modulo pp.value to a unit modulo n that is 1 on the other
// prime-power components.
long crt_lift(long residue, long pp_value, long n) {
  long rest = n / pp_value;
  if (rest == 1) return mod(residue, n);
  // x = residue (mod pp_value), x = 1 (mod rest)
  long inv = inverse_mod(rest, pp_value);
  long t = mod((residue - 1) % pp_value * inv, pp_value);
  return mod(1 + rest * t, n);
}

}  // namespace

std::vector<std::pair<long, long>> unit_group_generators(long n) {
  std::vector<std::pair<long, long>> out;
  for (const auto& pp : factorize(n)) {
    if (pp.prime == 2) {
      if (pp.exponent == 1) continue;
      out.emplace_back(crt_lift(-1, pp.value, n), 2);
      if (pp.exponent >= 3) {
        out.emplace_back(crt_lift(5, pp.value, n), pp.value / 4);
      }
      continue;
    }
    long phi = pp.value / pp.prime * (pp.prime - 1);
    for (long g = 2; g < pp.value; ++g) {
      if (gcd(g, pp.prime) != 1) continue;
      if (multiplicative_order(g, pp.value) == phi) {
        out.emplace_back(crt_lift(g, pp.value, n), phi);
        break;
      }
    }
  }
  return out;
}

std::vector<std::int64_t> cyclotomic_polynomial(long n) {
  static std::mutex mu;
  static std::map<long, std::vector<std::int64_t>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  // x^n - 1 divided by every Phi_d for proper divisors d.
  std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto divisor = cyclotomic_polynomial(d);
    // Exact division by a monic polynomial.
    std::size_t dd = divisor.size() - 1;
    std::size_t pd = poly.size() - 1;
    std::vector<std::int64_t> q(pd - dd + 1, 0);
    for (std::size_t k = pd + 1; k-- > dd;) {
      std::int64_t c = poly[k];
      q[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) poly[k - dd + j] -= c * divisor[j];
    }
    poly = std::move(q);
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(n, poly);
  return poly;
}

}  // namespace cliffatlas::nt
