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


#include <catch_amalgamated.hpp>

#include <random>

#include "cliffatlas/atlas.hpp"
#include "cliffatlas/gate_matrix.hpp"
#include "cliffatlas/gates.hpp"

using namespace cliffatlas;

namespace {

GateMatrix g(const char* expr) { return gates::evaluate(expr); }

Cyclotomic zeta(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

GateMatrix random_clifford1(std::mt19937_64& rng) {
  static const GateMatrix h = g("H");
  static const GateMatrix s = g("S");
  GateMatrix m = GateMatrix::identity(2);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int k = 0; k < 8; ++k) m = m * (coin(rng) ? h : s);
  return m;
}

}  // namespace

TEST_CASE("trace, determinant and adjoint on small examples") {
  CHECK(kron(g("X"), g("I")).trace().is_zero());
  CHECK(g("BELL").det().is_one());
  CHECK((g("BELL").adjoint() * g("BELL")).is_identity());
  CHECK(g("BELL").adjoint() == g("BELL^dag"));
  CHECK(GateMatrix::identity(4).trace() == Cyclotomic(4));
}

TEST_CASE("scalar detection") {
  CHECK(GateMatrix::identity(4).is_scalar() == Cyclotomic(1));
  CHECK(g("iII").is_scalar() == zeta(4));
  CHECK_FALSE(g("CNOT12").is_scalar().has_value());
}

TEST_CASE("monomial parts on small examples") {
  // DCNOT sends the basis state |ab> to |a xor b, a>, up to phases.
  auto d = monomial_parts(g("DCNOT"));
  REQUIRE(d.has_value());
  std::vector<int> expected_perm(4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) expected_perm[static_cast<std::size_t>(2 * a + b)] = 2 * (a ^ b) + a;
  }
  CHECK(d->perm == expected_perm);
  CHECK(d->perm == std::vector<int>{0, 2, 3, 1});  // the 3-cycle (2 3 4) on 1-based labels
  CHECK(d->diagonal.is_diagonal());

  auto cz = monomial_parts(g("CZ"));
  REQUIRE(cz.has_value());
  CHECK(cz->perm == std::vector<int>{0, 1, 2, 3});
  const Cyclotomic w = zeta(8, -1);
  CHECK(cz->diagonal == GateMatrix::diagonal({w, w, w, -w}));

  CHECK_FALSE(monomial_parts(g("BELL")).has_value());
}

TEST_CASE("tensor factorization by realignment") {
  CHECK(tensor_factorizable(kron(g("S"), g("H"))));
  CHECK_FALSE(tensor_factorizable(g("CNOT12")));
  CHECK_FALSE(tensor_factorizable(g("SWAP")));
  CHECK(tensor_factorizable(g("iII")));
}

TEST_CASE("algebraic identities on random Clifford factors") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const GateMatrix a = random_clifford1(rng), b = random_clifford1(rng);
    const GateMatrix c = random_clifford1(rng), d = random_clifford1(rng);
    REQUIRE(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    const GateMatrix x = kron(a, b) * g("CNOT") * kron(c, d);
    const GateMatrix y = g("BELL") * kron(d, a);
    REQUIRE((x * y).det() == x.det() * y.det());
    REQUIRE((x * y).trace() == (y * x).trace());
    REQUIRE(tensor_factorizable(kron(a, b)));
    REQUIRE(tensor_factorizable(Cyclotomic::root_of_unity(8, 3) * kron(a, b)));
    REQUIRE(tensor_factorizable(x) == tensor_factorizable(zeta(8) * x));
  }
}

TEST_CASE("matrix JSON and keys") {
  const GateMatrix m = g("K");
  CHECK(GateMatrix::from_json(m.to_json()) == m);
  CHECK(m.to_json().at("dim") == 4);
  CHECK(m.key() == GateMatrix::from_json(m.to_json()).key());
  CHECK(m.key() != g("BELL").key());
}

TEST_CASE("monomial parts reassemble every element of the monomial atlas groups") {
  std::size_t checked = 0;
  for (Family f : {Family::MonomialS4, Family::MonomialA4, Family::MonomialD4, Family::MonomialV4}) {
    EntryFilter filter;
    filter.family = f;
    for (const AtlasEntry* e : Atlas::builtin().all_entries(filter)) {
      const MatrixGroup grp = build_group(*e);
      for (std::uint32_t k = 0; k < grp.order(); ++k) {
        const GateMatrix m = grp.element(k);
        auto parts = monomial_parts(m);
        REQUIRE(parts.has_value());
        REQUIRE(parts->diagonal.is_diagonal());
        REQUIRE(GateMatrix::permutation(parts->perm) * parts->diagonal == m);
        ++checked;
      }
    }
  }
  CHECK(checked > 10000);
}
