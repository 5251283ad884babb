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


#include "cliffatlas/dense_domain.hpp"

#include <algorithm>
#include <cstring>

#include "cliffatlas/number_theory.hpp"

namespace cliffatlas {

DenseDomain::DenseDomain(int dim, long conductor, std::int64_t scale)
    : dim_(dim),
      field_(conductor, scale),
      stride_(static_cast<std::size_t>(dim * dim * field_.degree())) {
  if (field_.degree() > 32) {
    throw std::invalid_argument("DenseDomain: field degree above 32 is not supported");
  }
}

std::shared_ptr<const DenseDomain> DenseDomain::for_generators(
    const std::vector<GateMatrix>& gens) {
  if (gens.empty()) throw std::invalid_argument("DenseDomain: no generators");
  int dim = gens.front().dim();
  long n = 1;
  std::vector<Cyclotomic> values;
  for (const auto& g : gens) {
    if (g.dim() != dim) throw std::invalid_argument("DenseDomain: mixed dimensions");
    n = nt::lcm(n, g.conductor());
    values.insert(values.end(), g.entries().begin(), g.entries().end());
  }
  return std::make_shared<const DenseDomain>(dim, n,
                                             FieldContext::required_scale(n, values));
}

std::shared_ptr<const DenseDomain> DenseDomain::rescaled(std::int64_t factor) const {
  return std::make_shared<const DenseDomain>(dim_, field_.conductor(),
                                             field_.scale() * factor);
}

void DenseDomain::encode(const GateMatrix& m, std::int64_t* out) const {
  if (m.dim() != dim_) throw std::invalid_argument("DenseDomain: dimension mismatch");
  const int deg = field_.degree();
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      field_.encode(m(r, c), out + static_cast<std::size_t>(r * dim_ + c) * deg);
    }
  }
}

GateMatrix DenseDomain::decode(const std::int64_t* a) const {
  GateMatrix m(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) m.at(r, c) = field_.decode(entry(a, r, c));
  }
  return m;
}

void DenseDomain::mul(const std::int64_t* a, const std::int64_t* b,
                      std::int64_t* out) const {
  const int deg = field_.degree();
  __int128 acc[64];
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      std::fill(acc, acc + 2 * deg, 0);
      for (int k = 0; k < dim_; ++k) {
        const std::int64_t* x = entry(a, r, k);
        const std::int64_t* y = entry(b, k, c);
        field_.multiply_accumulate(x, y, acc);
      }
      field_.finish(acc, out + static_cast<std::size_t>(r * dim_ + c) * deg);
    }
  }
}

void DenseDomain::adjoint(const std::int64_t* a, std::int64_t* out) const {
  const int deg = field_.degree();
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      field_.conjugate(entry(a, c, r), out + static_cast<std::size_t>(r * dim_ + c) * deg);
    }
  }
}

void DenseDomain::identity(std::int64_t* out) const {
  std::fill(out, out + stride_, 0);
  const int deg = field_.degree();
  for (int i = 0; i < dim_; ++i) {
    out[static_cast<std::size_t>(i * dim_ + i) * deg] = field_.scale();
  }
}

bool DenseDomain::equal(const std::int64_t* a, const std::int64_t* b) const {
  return std::memcmp(a, b, stride_ * sizeof(std::int64_t)) == 0;
}

bool DenseDomain::less(const std::int64_t* a, const std::int64_t* b) const {
  return std::lexicographical_compare(a, a + stride_, b, b + stride_);
}

bool DenseDomain::entry_is_zero(const std::int64_t* a, int row, int col) const {
  const std::int64_t* e = entry(a, row, col);
  return std::all_of(e, e + field_.degree(), [](std::int64_t v) { return v == 0; });
}

bool DenseDomain::is_scalar(const std::int64_t* a) const {
  const int deg = field_.degree();
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      if (r != c && !entry_is_zero(a, r, c)) return false;
    }
  }
  for (int i = 1; i < dim_; ++i) {
    if (!std::equal(entry(a, 0, 0), entry(a, 0, 0) + deg, entry(a, i, i))) return false;
  }
  return true;
}

void DenseDomain::trace(const std::int64_t* a, std::int64_t* out) const {
  const int deg = field_.degree();
  std::fill(out, out + deg, 0);
  for (int i = 0; i < dim_; ++i) {
    const std::int64_t* e = entry(a, i, i);
    for (int j = 0; j < deg; ++j) out[j] += e[j];
  }
}

bool DenseDomain::products_equal(const std::int64_t* p, const std::int64_t* s,
                                 const std::int64_t* q, const std::int64_t* r) const {
  const int deg = field_.degree();
  __int128 lhs[64], rhs[64];
  std::fill(lhs, lhs + 2 * deg, 0);
  std::fill(rhs, rhs + 2 * deg, 0);
  field_.multiply_accumulate(p, s, lhs);
  field_.multiply_accumulate(q, r, rhs);
  for (int j = 0; j < 2 * deg; ++j) lhs[j] -= rhs[j];
  field_.reduce(lhs);
  return std::all_of(lhs, lhs + deg, [](__int128 v) { return v == 0; });
}

}  // namespace cliffatlas
