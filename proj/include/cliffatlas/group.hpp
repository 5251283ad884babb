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
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cliffatlas/dense_domain.hpp"
#include "cliffatlas/gate_matrix.hpp"

namespace cliffatlas {

/// A computation would exceed its configured size or feasibility bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LiftSymbol { None, Tau, Sigma };

struct LiftClass {
  int scalar_order = 1;
  LiftSymbol symbol = LiftSymbol::None;
};

/// "", "τ" or "σ".
std::string lift_symbol_string(LiftSymbol s);

/// Isomorphism invariants of a finite group. Equal groups always produce
/// equal fingerprints; the converse is what the lattice survey checks.
struct GroupFingerprint {
  std::uint64_t order = 0;
  std::map<long, long> element_orders;  // element order -> count
  std::map<long, long> class_sizes;     // class size -> number of classes
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::vector<long> abelian_invariants;
  long scalar_order = 0;
  // Refinements used when the fields above collide.
  std::vector<std::uint64_t> derived_series;
  std::map<std::pair<long, long>, long> order_class_histogram;
  /// (element order, class size, centralizer abelian invariants) -> classes.
  std::map<std::tuple<long, long, std::vector<long>>, long> centralizer_profile;
  std::string ring_label;

  bool base_equal(const GroupFingerprint& o) const;
  /// Equality without the ring label.
  bool structural_equal(const GroupFingerprint& o) const;
  friend bool operator==(const GroupFingerprint& a, const GroupFingerprint& b) {
    return a.structural_equal(b) && a.ring_label == b.ring_label;
  }
  nlohmann::json to_json() const;
};

/**
 * Finite group of square cyclotomic matrices, closed by breadth-first search.
 *
 * Elements live in a dense fixed-field encoding shared with every subgroup
 * derived from the same parent, so membership is a hash lookup. Element 0 is
 * always the identity. Handles are cheap to copy and share derived caches;
 * all const members are safe to call concurrently.
 */
class MatrixGroup {
 public:
  static constexpr std::size_t kDefaultCap = 200000;

  /// Closure of `gens`; throws ResourceError when the order would exceed cap.
  static MatrixGroup generate(const std::vector<GateMatrix>& gens,
                              std::size_t cap = kDefaultCap);

  /// Closure of `gens` in this group's encoding (gens need not be members).
  MatrixGroup subgroup(const std::vector<GateMatrix>& gens,
                       std::size_t cap = kDefaultCap) const;
  MatrixGroup subgroup_by_indices(const std::vector<std::uint32_t>& gens) const;
  /// Wraps a set of element indices already known to form a subgroup.
  MatrixGroup subgroup_from_elements(const std::vector<std::uint32_t>& elements) const;

  std::size_t order() const;
  int dim() const;
  const std::vector<GateMatrix>& generators() const;
  const std::vector<std::uint32_t>& generator_indices() const;

  GateMatrix element(std::uint32_t i) const;
  std::vector<GateMatrix> elements() const;
  std::optional<std::uint32_t> index_of(const GateMatrix& m) const;
  std::optional<std::uint32_t> index_of_raw(const std::int64_t* block) const;
  bool contains(const GateMatrix& m) const;
  /// True when every generator of h is an element of this group.
  bool contains_group(const MatrixGroup& h) const;
  bool same_group(const MatrixGroup& h) const;
  /// True when this group is a normal subgroup of g.
  bool is_normal_in(const MatrixGroup& g) const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const;
  std::uint32_t power(std::uint32_t a, long e) const;
  static constexpr std::uint32_t identity_index() { return 0; }

  long element_order(std::uint32_t a) const;
  const std::vector<long>& element_orders() const;
  const std::vector<std::vector<std::uint32_t>>& conjugacy_classes() const;

  std::vector<std::uint32_t> scalar_elements() const;
  LiftClass lift() const;
  std::size_t projective_order() const;

  MatrixGroup center() const;
  MatrixGroup centralizer(std::uint32_t x) const;
  MatrixGroup derived_subgroup() const;
  bool is_perfect() const;
  bool is_abelian() const;
  /// Invariant factors d1 | d2 | ... of the abelianization.
  std::vector<long> abelian_invariants() const;
  /// Orders of G, G', G'', ... until the series stabilizes.
  std::vector<std::uint64_t> derived_series() const;
  GroupFingerprint fingerprint() const;

  /// For every element, the index of its coset x*N for a normal subgroup n of
  /// this group, numbered in order of first appearance.
  std::vector<std::uint32_t> coset_labels(const MatrixGroup& n) const;

  /// Distinct traces with multiplicities, ordered by canonical text.
  const std::vector<std::pair<Cyclotomic, std::size_t>>& trace_multiset() const;

  const DenseDomain& domain() const;
  const std::int64_t* raw(std::uint32_t i) const;

 private:
  struct Impl;
  explicit MatrixGroup(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  static std::shared_ptr<Impl> build(std::shared_ptr<const DenseDomain> domain,
                                     const std::vector<std::vector<std::int64_t>>& gens,
                                     std::size_t cap);
  MatrixGroup wrap(const std::vector<std::uint32_t>& elements,
                   const std::vector<std::uint32_t>& gens) const;
  std::shared_ptr<Impl> impl_;
};

}  // namespace cliffatlas
