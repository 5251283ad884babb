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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliffatlas/cyclotomic.hpp"

namespace cliffatlas {

/// Square matrix over the cyclotomic numbers; dimension 2 or 4 in practice.
class GateMatrix {
 public:
  GateMatrix() = default;
  explicit GateMatrix(int dim);

  static GateMatrix identity(int dim);
  static GateMatrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows);
  static GateMatrix diagonal(const std::vector<Cyclotomic>& diag);
  /// Permutation matrix with a one at (perm[j], j).
  static GateMatrix permutation(const std::vector<int>& perm);

  int dim() const { return dim_; }
  const Cyclotomic& operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * dim_ + col)];
  }
  Cyclotomic& at(int row, int col) {
    return entries_[static_cast<std::size_t>(row * dim_ + col)];
  }

  friend GateMatrix operator*(const GateMatrix& a, const GateMatrix& b);
  friend GateMatrix operator*(const Cyclotomic& s, const GateMatrix& m);
  friend GateMatrix operator+(const GateMatrix& a, const GateMatrix& b);
  GateMatrix operator-() const;

  GateMatrix adjoint() const;
  GateMatrix transpose() const;
  GateMatrix pow(long e) const;
  Cyclotomic det() const;
  Cyclotomic trace() const;

  /// The scalar s with this == s * I, if any.
  std::optional<Cyclotomic> is_scalar() const;
  bool is_identity() const;
  bool is_diagonal() const;

  /// Canonical key: entry serializations in row-major order.
  std::string key() const;
  std::size_t hash() const;

  nlohmann::json to_json() const;
  static GateMatrix from_json(const nlohmann::json& j);

  /// Every entry, row-major.
  const std::vector<Cyclotomic>& entries() const { return entries_; }
  /// Least common multiple of the entry conductors.
  long conductor() const;

  friend bool operator==(const GateMatrix& a, const GateMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  int dim_ = 0;
  std::vector<Cyclotomic> entries_;
};

GateMatrix kron(const GateMatrix& a, const GateMatrix& b);

struct MonomialParts {
  std::vector<int> perm;  // perm[j] is the row holding column j's nonzero entry
  GateMatrix diagonal;
};

/// Splits m = P(perm) * D when m has exactly one nonzero per row and column.
std::optional<MonomialParts> monomial_parts(const GateMatrix& m);

/// True when a 4x4 matrix equals A (x) B for 2x2 A and B.
bool tensor_factorizable(const GateMatrix& m);

}  // namespace cliffatlas

template <>
struct std::hash<cliffatlas::GateMatrix> {
  std::size_t operator()(const cliffatlas::GateMatrix& m) const noexcept {
    return m.hash();
  }
};
