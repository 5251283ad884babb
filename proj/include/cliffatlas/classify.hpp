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

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cliffatlas/cyclotomic.hpp"
#include "cliffatlas/gate_matrix.hpp"
#include "cliffatlas/group.hpp"
#include "cliffatlas/rational.hpp"

namespace cliffatlas {

/// Character inner product test: sum of |tr g|^2 equals |G|.
bool is_irreducible(const MatrixGroup& g);

enum class Entanglement { Local, NonEntangling, Entangling };
std::string to_string(Entanglement e);

/// Two-qubit groups only.
Entanglement entanglement_class(const MatrixGroup& g);

enum class ShapeTag { S4, A4, D4, V4, Other };

struct Shape {
  ShapeTag tag = ShapeTag::Other;
  std::string description;  // "S4", "A4", "D4", "V4" or "order n" for other images
  std::vector<std::vector<int>> image;  // permutations of the basis, sorted
};
std::string to_string(ShapeTag t);

struct MonomialStructure {
  Shape shape;
  MatrixGroup delta;  // the diagonal elements
};

/// Empty when some element is not monomial in the computational basis.
std::optional<MonomialStructure> monomial_shape(const MatrixGroup& g);

/// Z-module spanned by 1 and the traces, closed under products.
struct CharacterRing {
  long conductor = 1;
  std::vector<Cyclotomic> basis;  // Hermite normal form rows at `conductor`
  std::optional<std::string> label;
};

CharacterRing character_ring(const MatrixGroup& g);
CharacterRing ring_from_values(const std::vector<Cyclotomic>& values);
/// True when both rings span the same Z-module.
bool same_module(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b);
/// Named rings with explicit Z-bases, e.g. "Z[i]" -> {1, i}.
const std::vector<std::pair<std::string, std::vector<Cyclotomic>>>& reference_rings();

/// Minimal Clifford hierarchy level, or none within the probed bound.
struct HierarchyLevel {
  std::optional<int> level;
  int bound = 0;
  std::string to_string() const;
  friend bool operator==(const HierarchyLevel&, const HierarchyLevel&) = default;
};

/**
 * Clifford hierarchy membership for one or two qubits. Level 1 is the Pauli
 * group closed under the phase i; level r holds U when U P U^dag is in level
 * r - 1 for every Pauli element P. Results are memoized per instance, and
 * the instance may be shared between threads.
 */
class HierarchyProbe {
 public:
  explicit HierarchyProbe(int dim = 4);

  bool in_level(const GateMatrix& m, int r);
  HierarchyLevel level(const GateMatrix& m, int max_level);
  /// Maximum over generators; unbounded if any generator is unbounded.
  HierarchyLevel group_level(const std::vector<GateMatrix>& gens, int max_level);

 private:
  bool in_level_locked(const GateMatrix& m, int r);

  int dim_;
  std::vector<GateMatrix> paulis_;  // the determinant-one Pauli group
  MatrixGroup level_one_;
  std::unordered_map<std::string, std::array<signed char, 16>> memo_;
  std::recursive_mutex mu_;
};

/// (1/|G|) sum |tr g|^(2t); throws std::logic_error if not rational.
Rational frame_potential(const MatrixGroup& g, int t);
/// Haar moment of U(d) for t <= d: t!.
long haar_moment(int t);

}  // namespace cliffatlas
