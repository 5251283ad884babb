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
#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include "cliffatlas/group.hpp"

namespace cliffatlas {

/// Set of element indices of a TableGroup, one bit per element.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : words_((n + 63) / 64, 0), size_(n) {}

  void insert(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool contains(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  std::size_t count() const;
  std::vector<std::uint32_t> members() const;
  std::size_t universe() const { return size_; }
  std::size_t hash() const;
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Finite group given by its full multiplication table.
class TableGroup {
 public:
  TableGroup(std::vector<std::uint32_t> table, std::size_t n, std::uint32_t identity,
             std::vector<std::uint32_t> generators);

  std::size_t order() const { return n_; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  long element_order(std::uint32_t a) const { return orders_[a]; }
  const std::vector<std::uint32_t>& generators() const { return generators_; }

  /// Subgroup generated by `gens`, as an element set.
  ElementSet closure(const std::vector<std::uint32_t>& gens) const;
  bool is_perfect(const std::vector<std::uint32_t>& gens, const ElementSet& members) const;
  ElementSet conjugate(const ElementSet& members, std::uint32_t g) const;

 private:
  std::vector<std::uint32_t> table_;
  std::size_t n_;
  std::uint32_t identity_;
  std::vector<std::uint32_t> inverse_;
  std::vector<long> orders_;
  std::vector<std::uint32_t> generators_;
};

/// A subgroup of a TableGroup with a generating set.
struct TableSubgroup {
  ElementSet members;
  std::vector<std::uint32_t> generators;
  std::size_t order() const { return members.count(); }
};

struct SubgroupLattice {
  std::vector<TableSubgroup> subgroups;  // sorted by order, then members
  /// Conjugacy classes of subgroups as indices into `subgroups`.
  std::vector<std::vector<std::size_t>> classes;
};

/// Every subgroup of `g`, by cyclic extension seeded with the trivial and the
/// perfect subgroups.
SubgroupLattice all_subgroups(const TableGroup& g);

/// G/N for N normal in G. Cosets are represented by the element with the
/// lexicographically smallest raw key and numbered in the order of those
/// keys.
struct CosetQuotient {
  MatrixGroup parent;
  MatrixGroup normal;
  std::vector<std::uint32_t> label;           // parent index -> coset
  std::vector<std::uint32_t> representative;  // coset -> parent index
  TableGroup group;

  static std::shared_ptr<const CosetQuotient> build(const MatrixGroup& g,
                                                    const MatrixGroup& n,
                                                    std::size_t max_index = 5000);
};

/// Subgroup H with N <= H <= G, stored as its image in G/N.
class IntermediateSubgroup {
 public:
  IntermediateSubgroup(std::shared_ptr<const CosetQuotient> quotient, TableSubgroup image)
      : quotient_(std::move(quotient)), image_(std::move(image)) {}

  std::size_t order() const { return image_.order() * quotient_->normal.order(); }
  const TableSubgroup& image() const { return image_; }
  /// Parent indices of a generating set: N's generators plus coset representatives.
  std::vector<std::uint32_t> generator_indices() const;
  MatrixGroup materialize() const;

 private:
  std::shared_ptr<const CosetQuotient> quotient_;
  TableSubgroup image_;
};

struct IntermediateLattice {
  std::shared_ptr<const CosetQuotient> quotient;
  std::vector<IntermediateSubgroup> subgroups;  // all of them, endpoints included
  std::vector<std::vector<std::size_t>> classes;

  std::size_t strictly_between() const;
};

/// All H with n <= H <= g for n normal in g; throws ResourceError when the
/// index exceeds max_index.
IntermediateLattice intermediate_lattice(const MatrixGroup& g, const MatrixGroup& n,
                                         std::size_t max_index = 5000);

/// Subgroups strictly between n and g.
std::vector<IntermediateSubgroup> intermediate_subgroups(const MatrixGroup& g,
                                                         const MatrixGroup& n,
                                                         std::size_t max_index = 5000);

}  // namespace cliffatlas
