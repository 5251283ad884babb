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


// Runs the acceptance criteria and prints one PASS/FAIL line per criterion,
// followed by indented detail lines. Exit status is 0 iff every line passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cliffatlas/atlas.hpp"
#include "cliffatlas/classify.hpp"
#include "cliffatlas/gates.hpp"
#include "cliffatlas/lattice.hpp"
#include "oracles.hpp"

using namespace cliffatlas;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("failed: " + what);
    }
  }
  void note(const std::string& text) { details.push_back(text); }
};

class Suite {
 public:
  explicit Suite(const Atlas& atlas) : atlas_(atlas) {
    ReportOptions options;
    options.fingerprint = false;
    for (const auto& e : atlas.entries()) {
      results_.emplace(e.name, verify(e, options, probe_));
    }
  }

  const Atlas& atlas() const { return atlas_; }
  const Verification& result(const std::string& name) const { return results_.at(name); }
  HierarchyProbe& probe() { return probe_; }

  MatrixGroup group(const std::string& name) {
    auto it = groups_.find(name);
    if (it == groups_.end()) it = groups_.emplace(name, build_group(atlas_.entry(name))).first;
    return it->second;
  }

  /// Diffs of the listed fields, as "entry: field expected X got Y" lines.
  std::vector<std::string> field_diffs(const std::vector<const AtlasEntry*>& entries,
                                       const std::set<std::string>& fields) const {
    std::vector<std::string> out;
    for (const AtlasEntry* e : entries) {
      const Verification& v = results_.at(e->name);
      if (v.error) out.push_back(e->name + ": " + *v.error);
      for (const auto& d : v.diffs) {
        if (fields.count(d.field)) {
          out.push_back(e->name + ": " + d.field + " expected " + d.expected + " got " + d.actual);
        }
      }
    }
    return out;
  }

  std::vector<const AtlasEntry*> entries(const EntryFilter& f = {}) const {
    return atlas_.all_entries(f);
  }

 private:
  const Atlas& atlas_;
  HierarchyProbe probe_{4};
  std::map<std::string, Verification> results_;
  std::map<std::string, MatrixGroup> groups_;
};

std::vector<GateMatrix> expand_all(std::initializer_list<const char*> items) {
  std::vector<GateMatrix> out;
  for (const char* item : items) {
    auto part = gates::expand(item);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

void require_no_diffs(Outcome& o, const std::vector<std::string>& diffs) {
  for (const auto& d : diffs) o.require(false, d);
}

std::vector<const AtlasEntry*> monomial_entries(const Suite& s) {
  std::vector<const AtlasEntry*> out;
  for (Family f : {Family::MonomialS4, Family::MonomialA4, Family::MonomialD4, Family::MonomialV4}) {
    EntryFilter filter;
    filter.family = f;
    for (const AtlasEntry* e : s.entries(filter)) out.push_back(e);
  }
  return out;
}

Outcome table_reproduction(Suite& s) {
  Outcome o;
  const auto all = s.entries();
  require_no_diffs(o, s.field_diffs(all, {"order", "projective_order", "lift"}));
  EntryFilter pauli;
  pauli.pauli_table_only = true;
  o.require(s.entries(pauli).size() == 56, "56 Pauli-table entries");
  for (auto [name, text] : {std::pair{"C2", "46080=11520σ"}, std::pair{"P2", "32=16τ"},
                            std::pair{"Ex(25920τ)", "51840=25920τ"}}) {
    o.require(s.result(name).report.order_string() == text, std::string(name) + " = " + text);
  }
  o.note(std::to_string(all.size()) + " entries checked for order, projective order and lift");
  return o;
}

Outcome shape_and_delta(Suite& s) {
  Outcome o;
  const auto mono = monomial_entries(s);
  o.require(mono.size() == 29, "29 monomial entries");
  require_no_diffs(o, s.field_diffs(mono, {"shape", "delta_order", "delta"}));
  for (const AtlasEntry* e : mono) {
    o.require(e->expected.shape && e->expected.delta_order, e->name + " has shape and delta data");
  }
  o.require(s.result("M(768σ,S4)").report.delta_order == 128u, "M(768σ,S4) delta order 128");
  o.require(s.result("M(48σ,A4)").report.delta_order == 16u, "M(48σ,A4) delta order 16");
  std::size_t with_generators = 0;
  for (const AtlasEntry* e : mono) with_generators += e->expected.delta_generators.empty() ? 0 : 1;
  o.note(std::to_string(mono.size()) + " monomial entries; " + std::to_string(with_generators) +
         " with delta compared by subgroup equality");
  return o;
}

Outcome commutator_chains(Suite& s) {
  Outcome o;
  const MatrixGroup local = MatrixGroup::generate(expand_all({"C1⊗C1"}));
  o.require(local.derived_subgroup().same_group(local.subgroup(expand_all({"C1'⊗C1'"}))),
            "derived(C1⊗C1) = C1'⊗C1'");

  const MatrixGroup c2d = s.group("C2").derived_subgroup();
  o.require(c2d.order() == 23040 && c2d.same_group(s.group("C2'")), "derived(C2) = C2' of order 23040");

  const MatrixGroup f4 = s.group("C(1920σ)_{Z[ζ8]}").derived_subgroup();
  o.require(f4.order() == 3840 && f4.same_group(s.group("C1(F4)")),
            "derived(C(1920σ)_{Z[ζ8]}) = C1(F4) of order 3840");

  const MatrixGroup a5 = s.group("C(120σ)_{Z[ζ8]}").derived_subgroup();
  o.require(a5.projective_order() == 60, "derived(C(120σ)_{Z[ζ8]}) has projective order 60");

  std::vector<const AtlasEntry*> stated;
  for (const auto& e : s.atlas().entries()) {
    if (e.expected.perfect) stated.push_back(&e);
  }
  require_no_diffs(o, s.field_diffs(stated, {"perfect"}));
  for (const char* name : {"C2'", "C1(F4)", "C(960τ)", "Ex(25920τ)", "Ex(2520τ)", "Ex(168τ)"}) {
    o.require(s.result(name).report.perfect, std::string(name) + " is perfect");
  }
  o.note(std::to_string(stated.size()) + " entries with a stated perfect flag");
  return o;
}

Outcome lattice_counts(Suite& s) {
  Outcome o;
  const LatticeSurvey survey = survey_lattice(s.atlas());
  o.require(survey.strictly_between == 1453, "1453 subgroups strictly between");
  o.require(survey.fingerprint_classes == 56, "56 fingerprint classes");
  o.require(survey.classes.size() == 56, "56 conjugacy classes");
  o.require(survey.fully_matched(), "every class matched to exactly one atlas entry");
  for (const auto& [a, b] : survey.unresolved) {
    o.require(false, "unresolved fingerprint pair: classes " + std::to_string(a + 1) + " and " +
                         std::to_string(b + 1));
  }
  for (const auto& name : survey.unmatched_entries) o.require(false, "unmatched entry " + name);
  o.note("subgroups including endpoints: " + std::to_string(survey.total_subgroups) +
         "; strictly between: " + std::to_string(survey.strictly_between));

  EntryFilter primitive;
  primitive.primitive_table_only = true;
  const auto table = s.entries(primitive);
  const auto collisions = fingerprint_collisions(table);
  o.require(collisions.size() == 1, "exactly one fingerprint-equal pair in the primitive table");
  for (const auto& c : collisions) {
    o.note("fingerprint-equal pair: " + c.first + " [" + c.first_ring + "] and " + c.second + " [" +
           c.second_ring + "]");
    const std::set<std::string> pair{c.first, c.second};
    o.require(pair == std::set<std::string>{"C(120σ)_{Z[i]}", "Ex(120σ)"},
              "the pair is C(120σ)_{Z[i]} and Ex(120σ)");
    o.require(c.first_ring != c.second_ring, "the pair has different character rings");
  }
  o.note(std::to_string(table.size()) + " primitive-table entries compared pairwise");
  return o;
}

Outcome character_rings(Suite& s) {
  Outcome o;
  std::vector<const AtlasEntry*> labelled;
  std::set<std::string> labels;
  for (const auto& e : s.atlas().entries()) {
    if (e.expected.ring) {
      labelled.push_back(&e);
      labels.insert(*e.expected.ring);
    }
  }
  require_no_diffs(o, s.field_diffs(labelled, {"character_ring"}));
  for (auto [a, b] : {std::pair{"C(576σ)_{Z[ζ8]}", "C(576σ)_{Z[i]}"},
                      std::pair{"M(384σ,S4)_{Z[i,√2]}", "M(384σ,S4)_{Z[i]}"},
                      std::pair{"M(96σ,S4)_{Z[i,2ζ8]}", "M(96σ,S4)_{Z[i]}"},
                      std::pair{"C(1920σ)_{Z[i,√2]}", "C(1920σ)_{Z[ζ8]}"}}) {
    o.require(s.result(a).report.character_ring != s.result(b).report.character_ring,
              std::string(a) + " and " + b + " have different rings");
  }
  o.note(std::to_string(labelled.size()) + " ring labels checked, " + std::to_string(labels.size()) +
         " distinct");
  return o;
}

Outcome designs(Suite& s) {
  Outcome o;
  for (const char* name : {"C2", "C2'", "Ex(25920τ)", "Ex(2520τ)"}) {
    o.require(s.result(name).report.frame_potentials[2] == Rational(6),
              std::string(name) + " frame potential 6 at t=3");
  }
  for (const char* name : {"C1(F4)", "C(1920σ)_{Z[ζ8]}"}) {
    o.require(s.result(name).report.frame_potentials[1] == Rational(2),
              std::string(name) + " frame potential 2 at t=2");
  }
  const auto all = s.entries();
  require_no_diffs(o, s.field_diffs(all, {"frame_potential_t1", "frame_potential_t2",
                                          "frame_potential_t3", "frame_potential_bound_t1",
                                          "frame_potential_bound_t2", "frame_potential_bound_t3"}));
  const auto moments = oracle::haar_trace_moments(4, 100000, 20260517);
  std::string line = "Monte-Carlo Haar moments:";
  for (int t = 1; t <= 3; ++t) {
    const double exact = static_cast<double>(haar_moment(t));
    const double estimate = moments[static_cast<std::size_t>(t - 1)];
    o.require(std::abs(estimate - exact) < 0.05 * exact,
              "Monte-Carlo moment t=" + std::to_string(t) + " within 5%");
    line += " t" + std::to_string(t) + "=" + std::to_string(estimate);
  }
  o.note(line);
  o.note(std::to_string(all.size()) + " groups checked against the Haar bound at t = 1, 2, 3");
  return o;
}

Outcome hierarchy(Suite& s) {
  Outcome o;
  EntryFilter pauli;
  pauli.pauli_table_only = true;
  std::map<std::string, int> levels;
  for (const AtlasEntry* e : s.entries(pauli)) {
    bool in_two = true;
    for (const auto& m : e->generator_matrices()) in_two = in_two && s.probe().in_level(m, 2);
    o.require(in_two, e->name + " lies in level 2");
    ++levels[s.result(e->name).report.hierarchy_level];
  }
  std::string summary = "minimal levels of the 56 groups:";
  for (const auto& [level, count] : levels) summary += " " + level + " x" + std::to_string(count);
  o.note(summary);

  std::size_t instances = 0;
  ReportOptions options;
  options.fingerprint = false;
  for (const auto& spec : s.atlas().series()) {
    for (int r = 2; r <= 3; ++r) {
      SeriesParams params;
      for (const auto& p : spec.parameters) params[p] = r;
      const AtlasEntry inst = s.atlas().instantiate_series(spec.id, params);
      const Verification v = verify(inst, options, s.probe());
      o.require(v.passed(), inst.name + " matches its order formula and level");
      o.require(v.report.hierarchy_level == std::to_string(r), inst.name + " level " + std::to_string(r));
      ++instances;
    }
  }
  o.note(std::to_string(instances) + " series instances at r = 2, 3");

  for (const char* gate : {"PHI⊗I", "U1", "V1", "V2", "W1", "W2", "W3"}) {
    o.require(s.probe().level(gates::evaluate(gate), 4).to_string() == "NotWithin(4)",
              std::string(gate) + " NotWithin(4)");
  }
  EntryFilter exotic;
  exotic.family = Family::Exotic;
  for (const AtlasEntry* e : s.entries(exotic)) {
    o.require(s.result(e->name).report.hierarchy_level == "NotWithin(4)", e->name + " NotWithin(4)");
  }
  o.note("U2 is a signed permutation and reports level " +
         s.probe().level(gates::evaluate("U2"), 4).to_string());
  return o;
}

Outcome property_suites(Suite& s) {
  Outcome o;
  std::mt19937_64 rng(8);
  std::size_t axiom_failures = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto a = oracle::random_cyclotomic(rng), b = oracle::random_cyclotomic(rng),
               c = oracle::random_cyclotomic(rng);
    const bool ok = (a.exact + b.exact) + c.exact == a.exact + (b.exact + c.exact) &&
                    (a.exact * b.exact) * c.exact == a.exact * (b.exact * c.exact) &&
                    a.exact * b.exact == b.exact * a.exact &&
                    a.exact + b.exact == b.exact + a.exact &&
                    a.exact * (b.exact + c.exact) == a.exact * b.exact + a.exact * c.exact &&
                    oracle::approx_equal(a.exact * b.exact + c.exact, a.approx * b.approx + c.approx);
    axiom_failures += ok ? 0 : 1;
  }
  o.require(axiom_failures == 0, "field axioms on 1000 random triples");

  EntryFilter pauli;
  pauli.pauli_table_only = true;
  for (const AtlasEntry* e : s.entries(pauli)) {
    const MatrixGroup g = s.group(e->name);
    std::vector<GateMatrix> extended = g.generators();
    for (int k = 0; k < 32; ++k) {
      extended.push_back(g.element(static_cast<std::uint32_t>(rng() % g.order())));
    }
    const MatrixGroup again = MatrixGroup::generate(extended);
    o.require(again.order() == g.order() && again.same_group(g), e->name + " closure idempotent");
  }

  std::size_t subgroups = 0;
  const MatrixGroup c2 = s.group("C2");
  const MatrixGroup base = c2.subgroup(gates::pauli2_phased());
  const IntermediateLattice lattice = intermediate_lattice(c2, base);
  for (const auto& h : lattice.subgroups) {
    const bool closed = lattice.quotient->group.closure(h.image().generators) == h.image().members;
    o.require(closed && c2.order() % h.order() == 0, "lattice member is a subgroup of dividing order");
    ++subgroups;
  }
  for (const auto& e : s.atlas().entries()) {
    const MatrixGroup g = s.group(e.name);
    const std::size_t n = g.order();
    o.require(n % g.derived_subgroup().order() == 0, e.name + " derived order divides");
    o.require(n % g.center().order() == 0, e.name + " center order divides");
    subgroups += 2;
    if (auto m = monomial_shape(g)) {
      o.require(n % m->delta.order() == 0, e.name + " delta order divides");
      ++subgroups;
    }
  }

  std::size_t monomial_elements = 0;
  for (const AtlasEntry* e : monomial_entries(s)) {
    const MatrixGroup g = s.group(e->name);
    for (std::uint32_t k = 0; k < g.order(); ++k) {
      const GateMatrix m = g.element(k);
      const auto parts = monomial_parts(m);
      o.require(parts && GateMatrix::permutation(parts->perm) * parts->diagonal == m,
                e->name + " monomial round-trip");
      ++monomial_elements;
    }
  }

  int samples = 0;
  std::mt19937_64 perm_rng(4);
  const GateMatrix bell = gates::constant("BELL");
  while (samples < 10) {
    std::vector<int> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), perm_rng);
    std::vector<Cyclotomic> signs;
    for (int k = 0; k < 4; ++k) signs.push_back(Cyclotomic(perm_rng() % 2 ? 1 : -1));
    const GateMatrix r = GateMatrix::permutation(perm) * GateMatrix::diagonal(signs);
    if (!r.det().is_one()) continue;
    o.require(tensor_factorizable(bell * r * bell.adjoint()), "BELL conjugation locality");
    ++samples;
  }
  o.note("1000 cyclotomic triples; " + std::to_string(subgroups) + " subgroups checked for Lagrange; " +
         std::to_string(monomial_elements) + " monomial elements round-tripped; 10 BELL samples");
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  Suite suite(Atlas::builtin());

  const std::vector<std::pair<std::string, std::function<Outcome(Suite&)>>> criteria = {
      {"table reproduction (orders, projective orders, lifts)", table_reproduction},
      {"monomial shapes and diagonal subgroups", shape_and_delta},
      {"commutator chains and perfect flags", commutator_chains},
      {"subgroup lattice counts and fingerprint classes", lattice_counts},
      {"character ring labels", character_rings},
      {"frame potentials and designs", designs},
      {"Clifford hierarchy levels", hierarchy},
      {"property suites", property_suites},
  };

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[k].second(suite);
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << k + 1 << " " << criteria[k].first << " ("
              << static_cast<long>(std::lround(secs)) << " s)\n";
    for (const auto& d : o.details) std::cout << "    " << d << "\n";
    std::cout.flush();
  }

  std::vector<std::string> other;
  for (const auto& e : suite.atlas().entries()) {
    for (const auto& d : suite.result(e.name).diffs) {
      other.push_back(e.name + ": " + d.field + " expected " + d.expected + " got " + d.actual);
    }
  }
  std::cout << "catalog diffs in any field: " << other.size() << "\n";
  for (const auto& d : other) std::cout << "    " << d << "\n";
  std::cout << "total time "
            << std::lround(std::chrono::duration<double>(Clock::now() - start).count()) << " s\n";
  return all ? 0 : 1;
}
