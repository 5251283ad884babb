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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliffatlas/gate_matrix.hpp"

namespace cliffatlas {

/// Malformed gate expression; `position()` is the byte offset of the problem.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace gates {

/// Determinant-one gate by name: I X Y Z S H F BELL SWAP iII CNOT CNOT12
/// CNOT21 DCNOT CZ K A PHI U1 U2 V1 V2 W1 W2 W3, plus Ph<m> and two-letter
/// tensor shorthands such as "SI" or "PHII". Throws std::out_of_range.
GateMatrix constant(std::string_view name);

/// Names accepted by constant() apart from the Ph<m> family and shorthands.
std::vector<std::string> constant_names();

/// diag(zeta_{2m}^{-1}, zeta_{2m}).
GateMatrix ph(long m);
/// Generators {Ph(m), X} of the binary dihedral group of degree m.
std::vector<GateMatrix> bd(long m);
/// Generators of the generalized quaternion group BD_{2^r}.
std::vector<GateMatrix> q(int r);

/// Evaluates a gate expression. Grammar:
///   expr   = term { ("·" | "*") term }
///   term   = factor { ("⊗" | "x") factor }
///   factor = atom { "^" integer | "^dag" | "†" }
///   atom   = name | "(" expr ")"
GateMatrix evaluate(std::string_view expr);

/// Generators named by one catalog item: either a group macro (P1, P2, Q<r>,
/// BD<m>, C1, C1', 2I, or "G1⊗G2" of single-qubit macros) or an expression.
std::vector<GateMatrix> expand(std::string_view item);

/// Generators of a single-qubit group macro; nullopt if the name is unknown.
std::optional<std::vector<GateMatrix>> single_qubit_group(std::string_view name);

/// The 32-element two-qubit Pauli group generators XI, ZI, IX, IZ.
std::vector<GateMatrix> pauli2();
/// The 64-element phase-closed Pauli group generators (pauli2 plus iII).
std::vector<GateMatrix> pauli2_phased();

}  // namespace gates
}  // namespace cliffatlas
