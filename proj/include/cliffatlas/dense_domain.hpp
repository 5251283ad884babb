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
#include <memory>
#include <vector>

#include "cliffatlas/dense_field.hpp"
#include "cliffatlas/gate_matrix.hpp"

namespace cliffatlas {

/**
 * Square matrices over one FieldContext, stored as flat int64 blocks of
 * `stride()` numbers (row-major entries, each `degree` numerators). Blocks
 * are canonical for the domain, so they double as hash keys.
 */
class DenseDomain {
 public:
  DenseDomain(int dim, long conductor, std::int64_t scale);

  /// Domain whose field holds every generator entry, with the smallest scale
  /// that encodes the generators themselves.
  static std::shared_ptr<const DenseDomain> for_generators(
      const std::vector<GateMatrix>& gens);
  std::shared_ptr<const DenseDomain> rescaled(std::int64_t factor) const;

  int dim() const { return dim_; }
  const FieldContext& field() const { return field_; }
  std::size_t stride() const { return stride_; }
  int degree() const { return field_.degree(); }

  void encode(const GateMatrix& m, std::int64_t* out) const;
  GateMatrix decode(const std::int64_t* a) const;

  void mul(const std::int64_t* a, const std::int64_t* b, std::int64_t* out) const;
  void adjoint(const std::int64_t* a, std::int64_t* out) const;
  void identity(std::int64_t* out) const;
  bool equal(const std::int64_t* a, const std::int64_t* b) const;
  /// Lexicographic order on raw blocks.
  bool less(const std::int64_t* a, const std::int64_t* b) const;

  const std::int64_t* entry(const std::int64_t* a, int row, int col) const {
    return a + static_cast<std::size_t>(row * dim_ + col) * field_.degree();
  }
  bool entry_is_zero(const std::int64_t* a, int row, int col) const;
  bool is_scalar(const std::int64_t* a) const;
  /// Trace numerators (degree entries).
  void trace(const std::int64_t* a, std::int64_t* out) const;
  /// True when p*s == q*r for four field elements.
  bool products_equal(const std::int64_t* p, const std::int64_t* s,
                      const std::int64_t* q, const std::int64_t* r) const;

 private:
  int dim_;
  FieldContext field_;
  std::size_t stride_;
};

}  // namespace cliffatlas
