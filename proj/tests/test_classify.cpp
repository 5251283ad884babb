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

#include <algorithm>
#include <cmath>
#include <set>

#include "cliffatlas/atlas.hpp"
#include "cliffatlas/classify.hpp"
#include "cliffatlas/gates.hpp"
#include "oracles.hpp"

using namespace cliffatlas;

namespace {

GateMatrix g(const char* expr) { return gates::evaluate(expr); }

std::vector<GateMatrix> gens(std::initializer_list<const char*> items) {
  std::vector<GateMatrix> out;
  for (const char* item : items) {
    auto part = gates::expand(item);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

MatrixGroup group(std::initializer_list<const char*> items) {
  return MatrixGroup::generate(gens(items));
}

MatrixGroup entry_group(const char* name) { return build_group(Atlas::builtin().entry(name)); }

HierarchyProbe& probe() {
  static HierarchyProbe p(4);
  return p;
}

}  // namespace

TEST_CASE("irreducibility by the character norm") {
  const MatrixGroup p2 = group({"P2"});
  CHECK(is_irreducible(p2));
  CHECK(std::abs(oracle::trace_norm_sum(p2) - 32.0) < 1e-9);
  CHECK_FALSE(is_irreducible(group({"ZI", "IZ"})));
  CHECK(is_irreducible(entry_group("C2")));
  CHECK_FALSE(is_irreducible(MatrixGroup::generate({GateMatrix::identity(4)})));
}

TEST_CASE("irreducibility is invariant under conjugation") {
  const GateMatrix u = g("BELL·K");
  for (const char* name : {"P2", "M(48σ,A4)", "Q(2)⊗C1'", "C(360τ)"}) {
    const MatrixGroup grp = entry_group(name);
    std::vector<GateMatrix> conj;
    for (const auto& x : grp.generators()) conj.push_back(u * x * u.adjoint());
    INFO(name);
    CHECK(is_irreducible(grp) == is_irreducible(MatrixGroup::generate(conj)));
    CHECK(character_ring(grp).label == character_ring(MatrixGroup::generate(conj)).label);
  }
  const MatrixGroup reducible = group({"ZI", "IS"});
  std::vector<GateMatrix> conj;
  for (const auto& x : reducible.generators()) conj.push_back(u * x * u.adjoint());
  CHECK_FALSE(is_irreducible(MatrixGroup::generate(conj)));
}

TEST_CASE("entanglement classes") {
  CHECK(entanglement_class(group({"C1'⊗C1'"})) == Entanglement::Local);
  CHECK(entanglement_class(group({"C1⊗C1", "SWAP"})) == Entanglement::NonEntangling);
  CHECK(entanglement_class(group({"P2", "BELL"})) == Entanglement::Entangling);
  CHECK(to_string(Entanglement::NonEntangling) == "non-entangling");
}

TEST_CASE("monomial shapes and diagonal subgroups") {
  auto a4 = monomial_shape(group({"P2", "DCNOT"}));
  REQUIRE(a4.has_value());
  CHECK(a4->shape.tag == ShapeTag::A4);
  CHECK(a4->delta.order() == 16);
  CHECK(a4->delta.same_group(group({"iII", "ZI", "IZ"})));

  auto s4 = monomial_shape(entry_group("M(768σ,S4)"));
  REQUIRE(s4.has_value());
  CHECK(s4->shape.tag == ShapeTag::S4);
  CHECK(s4->delta.order() == 128);

  CHECK_FALSE(monomial_shape(group({"C1⊗C1"})).has_value());

  const MatrixGroup diag = group({"ZI", "IS", "iII"});
  auto d = monomial_shape(diag);
  REQUIRE(d.has_value());
  CHECK(d->shape.image.size() == 1);
  CHECK(d->delta.same_group(diag));

  auto d4 = monomial_shape(entry_group("M(32σ,D4)"));
  REQUIRE(d4.has_value());
  CHECK(d4->shape.tag == ShapeTag::D4);
  CHECK(d4->shape.image.size() == 8);
  auto v4 = monomial_shape(entry_group("M(128σ,V4)"));
  REQUIRE(v4.has_value());
  CHECK(v4->shape.tag == ShapeTag::V4);
}

TEST_CASE("character rings") {
  CHECK(character_ring(entry_group("M(96σ,S4)_{Z[i]}")).label == "Z[i]");
  CHECK(character_ring(entry_group("M(96σ,S4)_{Z[i,2ζ8]}")).label == "Z[i,2zeta8]");

  // P2: enumerate the traces first, then decide which ring to expect.
  const MatrixGroup p2 = group({"P2"});
  std::set<std::string> traces;
  bool imaginary = false;
  for (const auto& m : p2.elements()) {
    const auto t = m.trace();
    traces.insert(t.to_string());
    imaginary = imaginary || std::abs(t.to_complex().imag()) > 1e-9;
  }
  const std::string expected = imaginary ? "Z[i]" : "Z";
  CHECK(character_ring(p2).label == expected);

  const CharacterRing ring = character_ring(entry_group("C2"));
  CHECK(std::find(ring.basis.begin(), ring.basis.end(), Cyclotomic(1)) != ring.basis.end());
  CHECK(ring.label == "Z[zeta8]");

  const MatrixGroup a = group({"P2", "BELL", "K"});
  const MatrixGroup b = group({"K", "BELL", "P2"});
  CHECK(character_ring(a).label == character_ring(b).label);
  CHECK(same_module(character_ring(a).basis, character_ring(b).basis));
}

TEST_CASE("reference rings have the stated bases") {
  const Cyclotomic i = Cyclotomic::root_of_unity(4);
  const Cyclotomic z8 = Cyclotomic::root_of_unity(8);
  const Cyclotomic r2 = Cyclotomic::sqrt_named(2);
  auto basis_of = [](const std::string& name) {
    for (const auto& [n, b] : reference_rings()) {
      if (n == name) return b;
    }
    FAIL("missing ring " << name);
    return std::vector<Cyclotomic>{};
  };
  CHECK(same_module(basis_of("Z[i]"), {Cyclotomic(1), i}));
  CHECK(same_module(basis_of("Z[zeta8]"), {Cyclotomic(1), z8, z8 * z8, z8 * z8 * z8}));
  CHECK(same_module(basis_of("Z[i,sqrt2]"), {Cyclotomic(1), i, r2, i * r2}));
  CHECK(same_module(basis_of("Z[i,2zeta8]"),
                    {Cyclotomic(1), i, Cyclotomic(2) * z8, Cyclotomic(2) * z8 * z8 * z8}));
  CHECK_FALSE(same_module(basis_of("Z[i,sqrt2]"), basis_of("Z[zeta8]")));
}

TEST_CASE("hierarchy levels of single gates") {
  CHECK(probe().level(g("ZI"), 4).to_string() == "1");
  CHECK(probe().level(g("SI"), 4).to_string() == "2");
  CHECK(probe().level(g("Ph8⊗I"), 4).to_string() == "3");
  CHECK(probe().level(g("Ph16⊗I"), 4).to_string() == "4");
  CHECK(probe().level(g("PHI⊗I"), 4).to_string() == "NotWithin(4)");
  CHECK(probe().level(g("PHI⊗I"), 2).to_string() == "NotWithin(2)");
  HierarchyProbe one(2);
  CHECK(one.level(g("S"), 3).to_string() == "2");
  CHECK(one.level(g("Ph8"), 3).to_string() == "3");
}

TEST_CASE("hierarchy levels of groups") {
  CHECK(probe().group_level(entry_group("C2").generators(), 4).to_string() == "2");
  CHECK(probe().group_level(gens({"Q(3)⊗Q(3)", "CNOT12", "CNOT21"}), 4).to_string() == "3");
  CHECK(probe().group_level(gens({"ZI", "PHI⊗I", "IZ", "I⊗PHI"}), 4).to_string() ==
        "NotWithin(4)");
}

TEST_CASE("hierarchy membership is monotone on Clifford atlas generators") {
  EntryFilter f;
  f.pauli_table_only = true;
  for (const AtlasEntry* e : Atlas::builtin().all_entries(f)) {
    for (const auto& m : e->generator_matrices()) {
      INFO(e->name);
      for (int r = 2; r <= 3; ++r) {
        if (probe().in_level(m, r)) REQUIRE(probe().in_level(m, r + 1));
      }
      REQUIRE(probe().in_level(m, 2));
    }
  }
}

TEST_CASE("frame potentials") {
  const MatrixGroup trivial = MatrixGroup::generate({GateMatrix::identity(4)});
  CHECK(frame_potential(trivial, 1) == Rational(16));
  CHECK(frame_potential(entry_group("C2"), 3) == Rational(6));
  const MatrixGroup f4 = entry_group("C1(F4)");
  CHECK(frame_potential(f4, 2) == Rational(2));
  CHECK(frame_potential(f4, 3) > Rational(6));
  CHECK(haar_moment(1) == 1);
  CHECK(haar_moment(2) == 2);
  CHECK(haar_moment(3) == 6);
}

TEST_CASE("Haar moments agree with Monte-Carlo sampling") {
  const auto moments = oracle::haar_trace_moments(4, 100000, 12345);
  for (int t = 1; t <= 3; ++t) {
    const double exact = static_cast<double>(haar_moment(t));
    INFO("t = " << t << " estimate " << moments[static_cast<std::size_t>(t - 1)]);
    CHECK(std::abs(moments[static_cast<std::size_t>(t - 1)] - exact) < 0.05 * exact);
  }
}
