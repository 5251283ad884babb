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
#include <vector>

namespace cliffatlas::nt {

struct PrimePower {
  long prime;
  int exponent;
  long value;  // prime^exponent
};

std::vector<PrimePower> factorize(long n);
long gcd(long a, long b);
long lcm(long a, long b);
long totient(long n);
long mod(long a, long m);  // result in [0, m)
long inverse_mod(long a, long m);
long pow_mod(long base, long exp, long m);

/// A set of units whose cyclic subgroups form an internal direct product
/// equal to (Z/n)^*. Each entry is (generator, order).
std::vector<std::pair<long, long>> unit_group_generators(long n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
/// first.
std::vector<std::int64_t> cyclotomic_polynomial(long n);

}  // namespace cliffatlas::nt
