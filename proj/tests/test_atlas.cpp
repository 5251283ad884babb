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
#include <set>

#include "cliffatlas/atlas.hpp"
#include "cliffatlas/gates.hpp"

using namespace cliffatlas;

namespace {

const Atlas& atlas() { return Atlas::builtin(); }

MatrixGroup entry_group(const char* name) { return build_group(atlas().entry(name)); }

HierarchyProbe& probe() {
  static HierarchyProbe p(4);
  return p;
}

ReportOptions quick() {
  ReportOptions o;
  o.fingerprint = false;
  return o;
}

}  // namespace

TEST_CASE("catalog structure") {
  CHECK(atlas().schema_version() == 1);
  std::set<std::string> names;
  for (const auto& e : atlas().entries()) names.insert(e.name);
  CHECK(names.size() == atlas().entries().size());

  EntryFilter pauli;
  pauli.pauli_table_only = true;
  CHECK(atlas().all_entries(pauli).size() == 56);
  EntryFilter primitive;
  primitive.primitive_table_only = true;
  CHECK(atlas().all_entries(primitive).size() == 31);
  EntryFilter s4;
  s4.family = Family::MonomialS4;
  CHECK(atlas().all_entries(s4).size() == 6);
  std::size_t monomial = 0;
  for (Family f : {Family::MonomialS4, Family::MonomialA4, Family::MonomialD4, Family::MonomialV4}) {
    EntryFilter filter;
    filter.family = f;
    monomial += atlas().all_entries(filter).size();
  }
  CHECK(monomial == 29);

  CHECK_THROWS_AS(atlas().entry("no such group"), std::out_of_range);
  CHECK(atlas().find("no such group") == nullptr);
}

TEST_CASE("catalog lookups") {
  const AtlasEntry& c2 = atlas().entry("C2");
  CHECK(c2.expected.order == 46080u);
  CHECK(c2.expected.projective_order == 11520u);
  CHECK(c2.expected.lift == "σ");
  CHECK(c2.expected_order_string() == "46080=11520σ");

  const AtlasEntry& ex = atlas().entry("Ex(25920τ)");
  CHECK(ex.expected.perfect == true);
  CHECK(ex.expected.ring == "Z[zeta3]");
  CHECK(ex.family == Family::Exotic);
}

TEST_CASE("families parse in both spellings") {
  CHECK(parse_family("monomial-s4") == Family::MonomialS4);
  CHECK(parse_family("MonomialS4") == Family::MonomialS4);
  CHECK(parse_family("clifford-no-pauli") == Family::CliffordNoPauli);
  CHECK_FALSE(parse_family("monomial").has_value());
  for (Family f : all_families()) CHECK(parse_family(to_string(f)) == f);
}

TEST_CASE("every generator parses to a determinant-one matrix") {
  for (const auto& e : atlas().entries()) {
    INFO(e.name);
    REQUIRE_FALSE(e.generators.empty());
    for (const auto& m : e.generator_matrices()) REQUIRE(m.det().is_one());
  }
}

TEST_CASE("the Pauli-table groups contain every Pauli matrix") {
  const MatrixGroup paulis = MatrixGroup::generate(gates::pauli2());
  EntryFilter pauli;
  pauli.pauli_table_only = true;
  for (const AtlasEntry* e : atlas().all_entries(pauli)) {
    INFO(e->name);
    const MatrixGroup g = build_group(*e);
    for (const auto& p : paulis.elements()) REQUIRE(g.contains(p));
  }
}

TEST_CASE("catalog JSON round-trips") {
  const Atlas copy = Atlas::parse(atlas().to_json().dump());
  CHECK(copy.to_json() == atlas().to_json());
  CHECK(copy.series().size() == atlas().series().size());

  auto j = atlas().to_json();
  j["schema_version"] = 2;
  CHECK_THROWS(Atlas::parse(j.dump()));
  j = atlas().to_json();
  j["entries"].push_back(j["entries"][0]);
  CHECK_THROWS(Atlas::parse(j.dump()));
  j = atlas().to_json();
  j["entries"][0]["family"] = "Unknown";
  CHECK_THROWS(Atlas::parse(j.dump()));
}

TEST_CASE("series instantiation") {
  const AtlasEntry s4 = atlas().instantiate_series("s4", {{"r", 2}});
  CHECK(s4.expected.projective_order == 768u);
  CHECK(build_group(s4).same_group(entry_group("M(768σ,S4)")));

  const AtlasEntry v4 = atlas().instantiate_series("v4", {{"r1", 1}, {"r2", 1}});
  CHECK(v4.expected.projective_order == 32u);
  const HierarchyLevel v4_level = probe().group_level(v4.generator_matrices(), 4);
  REQUIRE(v4_level.level.has_value());
  CHECK(*v4_level.level <= 2);

  const AtlasEntry a4 = atlas().instantiate_series("a4", {{"r", 3}});
  CHECK(a4.expected.projective_order == 3072u);
  const MatrixGroup a4g = build_group(a4);
  CHECK(a4g.projective_order() == 3072);
  CHECK(probe().group_level(a4.generator_matrices(), 4).to_string() == "3");

  CHECK_THROWS_AS(atlas().instantiate_series("s4", {{"r", 6}}), std::out_of_range);
  CHECK_THROWS_AS(atlas().instantiate_series("s4", {{"r", 0}}), std::out_of_range);
  CHECK_THROWS_AS(atlas().instantiate_series("v4", {{"r1", 2}}), std::out_of_range);
  CHECK_THROWS_AS(atlas().instantiate_series("n-c1", {{"r", 1}}), std::out_of_range);
  CHECK_THROWS_AS(atlas().instantiate_series("nope", {{"r", 1}}), std::out_of_range);
  CHECK_NOTHROW(atlas().instantiate_series("s4", {{"r", 6}}, 6));
}

TEST_CASE("series base instances reproduce catalog groups") {
  for (const auto& s : atlas().series()) {
    for (const auto& [params, name] : s.instances) {
      INFO(s.id << " " << params);
      const AtlasEntry inst = atlas().instantiate_series(s.id, parse_params(params));
      const MatrixGroup g = build_group(inst);
      REQUIRE(g.same_group(build_group(atlas().entry(name))));
      REQUIRE(g.order() == *inst.expected.order);
    }
  }
}

TEST_CASE("parameter text") {
  CHECK(parse_params("r1=2,r2=3") == SeriesParams{{"r1", 2}, {"r2", 3}});
  CHECK(format_params(atlas().series_spec("v4"), {{"r1", 2}, {"r2", 3}}) == "r1=2,r2=3");
  CHECK_THROWS_AS(parse_params("r"), std::invalid_argument);
  CHECK_THROWS_AS(parse_params("r=x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_params(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_params("r=2x"), std::invalid_argument);
}

TEST_CASE("generator lists") {
  CHECK(split_generator_list("⟨P2, BELL⟩") == std::vector<std::string>{"P2", "BELL"});
  CHECK(split_generator_list("<C1⊗C1,SWAP>") == std::vector<std::string>{"C1⊗C1", "SWAP"});
  CHECK(split_generator_list("BELL·(X⊗Z)") == std::vector<std::string>{"BELL·(X⊗Z)"});
  CHECK(split_generator_list("⟨ , ⟩").empty());
}

TEST_CASE("verification diffs") {
  const Verification p2 = verify(atlas().entry("P2"), quick(), probe());
  CHECK(p2.passed());
  CHECK(p2.diffs.empty());
  CHECK(p2.report.order_string() == "32=16τ");

  AtlasEntry corrupted = atlas().entry("P2");
  corrupted.expected.order = 33;
  const Verification bad = verify(corrupted, quick(), probe());
  REQUIRE(bad.diffs.size() == 1);
  CHECK(bad.diffs[0].field == "order");
  CHECK(bad.diffs[0].expected == "33");
  CHECK(bad.diffs[0].actual == "32");

  AtlasEntry broken = atlas().entry("P2");
  broken.generators = {"NOT A GATE"};
  const Verification err = verify(broken, quick(), probe());
  CHECK_FALSE(err.passed());
  CHECK(err.error.has_value());
  CHECK_FALSE(err.resource_exceeded);

  ReportOptions tiny = quick();
  tiny.cap = 10;
  const Verification big = verify(atlas().entry("C2"), tiny, probe());
  CHECK(big.resource_exceeded);

  const Verification design = verify(atlas().entry("C(1920σ)_{Z[ζ8]}"), quick(), probe());
  CHECK(design.passed());
  CHECK(design.report.frame_potentials[1] == Rational(2));

  const auto j = p2.to_json();
  CHECK(j.at("passed") == true);
  CHECK(j.at("order") == 32);
  CHECK(j.at("frame_potentials").at("t1") == "1");
}

TEST_CASE("derived-subgroup relations between catalog groups") {
  CHECK(entry_group("C(1920σ)_{Z[ζ8]}").derived_subgroup().same_group(entry_group("C1(F4)")));
  std::vector<GateMatrix> gens = gates::expand("C1⊗C1");
  gens.push_back(gates::constant("SWAP"));
  CHECK(MatrixGroup::generate(gens).derived_subgroup().same_group(entry_group("C2^{⋈'}")));
  CHECK(entry_group("C(1920σ)_{Z[i,√2]}").derived_subgroup().same_group(entry_group("C(960τ)")));
}

TEST_CASE("paired groups are told apart by their character rings") {
  for (auto [a, b] : {std::pair{"C(576σ)_{Z[ζ8]}", "C(576σ)_{Z[i]}"},
                      std::pair{"M(384σ,S4)_{Z[i,√2]}", "M(384σ,S4)_{Z[i]}"},
                      std::pair{"M(96σ,S4)_{Z[i,2ζ8]}", "M(96σ,S4)_{Z[i]}"},
                      std::pair{"C(1920σ)_{Z[i,√2]}", "C(1920σ)_{Z[ζ8]}"}}) {
    INFO(a << " vs " << b);
    const auto ra = character_ring(entry_group(a));
    const auto rb = character_ring(entry_group(b));
    CHECK(ra.label != rb.label);
    CHECK_FALSE(same_module(ra.basis, rb.basis));
  }
}

TEST_CASE("the isomorphism exception pair") {
  const MatrixGroup a = entry_group("C(120σ)_{Z[i]}");
  const MatrixGroup b = entry_group("Ex(120σ)");
  CHECK(a.fingerprint().structural_equal(b.fingerprint()));
  CHECK(character_ring(a).label != character_ring(b).label);
}
