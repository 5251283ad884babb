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
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cliffatlas/classify.hpp"
#include "cliffatlas/gate_matrix.hpp"
#include "cliffatlas/group.hpp"
#include "cliffatlas/rational.hpp"

namespace cliffatlas {

enum class Family {
  PrimitiveLocal,
  PrimitiveNonEntangling,
  PrimitiveEntangling,
  MonomialS4,
  MonomialA4,
  MonomialD4,
  MonomialV4,
  NonMonomialLocal,
  NonMonomialEntangling,
  CliffordNoPauli,
  Exotic,
};

/// "PrimitiveLocal", ...
std::string to_string(Family f);
/// Accepts "PrimitiveLocal" or the kebab form "primitive-local".
std::optional<Family> parse_family(std::string_view text);
const std::vector<Family>& all_families();

/// Expected invariants; absent fields are not checked.
struct ExpectedInvariants {
  std::optional<std::uint64_t> order;
  std::optional<std::uint64_t> projective_order;
  std::optional<std::string> lift;  // "", "τ" or "σ"
  std::optional<bool> irreducible;
  std::optional<std::string> entanglement;
  std::optional<bool> contains_pauli;
  std::optional<std::string> level;  // "2" or "NotWithin(4)"
  std::optional<std::string> shape;  // "S4", "A4", "D4", "V4" or "none"
  std::vector<std::string> delta_generators;
  std::optional<std::uint64_t> delta_order;
  std::optional<std::string> ring;
  std::optional<int> design;  // strongest t with frame potential equal to Haar
  std::optional<bool> perfect;

  nlohmann::json to_json() const;
  static ExpectedInvariants from_json(const nlohmann::json& j);
};

struct AtlasEntry {
  std::string name;
  Family family = Family::PrimitiveLocal;
  std::string class_name;
  std::vector<std::string> generators;  // gate expressions or group macros
  ExpectedInvariants expected;
  std::vector<std::string> citations;
  std::map<std::string, std::string> external_ids;  // opaque
  bool pauli_table = false;      // one of the 56 subgroups of C2 containing P2
  bool primitive_table = false;  // one of the 31 primitive subgroups of SU(4)

  std::vector<GateMatrix> generator_matrices() const;
  /// "total=projectiveσ", or the bare total when there is no lift symbol.
  std::string expected_order_string() const;

  nlohmann::json to_json() const;
  static AtlasEntry from_json(const nlohmann::json& j);
};

/// Parameter values of a series instance, keyed by name ("r", "r1", "r2").
using SeriesParams = std::map<std::string, int>;

struct SeriesSpec {
  std::string id;
  std::string name;
  Family family = Family::MonomialS4;
  std::vector<std::string> parameters;
  std::vector<std::string> generators;  // "{r}" placeholders
  /// Projective order = coefficient * 2^(a1*p1 + a2*p2 + c) for parameters p1, p2.
  std::uint64_t coefficient = 1;
  std::array<long, 3> log2_linear{0, 0, 0};
  std::string lift;
  int base_level = 2;
  int min_value = 1;  // smallest parameter value the order formula covers
  std::map<std::string, std::string> instances;  // "r=2" -> atlas entry name
  std::vector<std::string> citations;

  std::uint64_t projective_order(const SeriesParams& p) const;
  std::uint64_t order(const SeriesParams& p) const;
  int expected_level(const SeriesParams& p) const;

  nlohmann::json to_json() const;
  static SeriesSpec from_json(const nlohmann::json& j);
};

/// "r=2" or "r1=2,r2=3", in the series' parameter order.
std::string format_params(const SeriesSpec& s, const SeriesParams& p);
/// Inverse of format_params; throws std::invalid_argument.
SeriesParams parse_params(std::string_view text);

struct EntryFilter {
  std::optional<Family> family;
  bool pauli_table_only = false;
  bool primitive_table_only = false;
  std::vector<std::string> names;  // empty means all
};

/// Immutable catalog of named groups and series.
class Atlas {
 public:
  /// The catalog compiled into the library.
  static const Atlas& builtin();
  static Atlas parse(std::string_view json_text);
  static Atlas load(const std::filesystem::path& path);

  int schema_version() const { return schema_version_; }
  /// Throws std::out_of_range for unknown names.
  const AtlasEntry& entry(std::string_view name) const;
  const AtlasEntry* find(std::string_view name) const;
  std::vector<const AtlasEntry*> all_entries(const EntryFilter& filter = {}) const;
  const std::vector<AtlasEntry>& entries() const { return entries_; }

  const std::vector<SeriesSpec>& series() const { return series_; }
  /// Throws std::out_of_range for unknown ids.
  const SeriesSpec& series_spec(std::string_view id) const;
  /// Throws std::out_of_range for unknown ids or parameters outside [min_value, max_r].
  AtlasEntry instantiate_series(std::string_view id, const SeriesParams& params,
                                int max_r = 5) const;

  nlohmann::json to_json() const;

 private:
  int schema_version_ = 0;
  std::vector<AtlasEntry> entries_;
  std::vector<SeriesSpec> series_;
};

struct ReportOptions {
  int max_level = 4;
  std::size_t cap = MatrixGroup::kDefaultCap;
  bool fingerprint = true;
};

/// Computed invariants of one group.
struct ClassificationReport {
  std::string name;
  std::vector<std::string> generators;
  std::uint64_t order = 0;
  std::uint64_t projective_order = 0;
  std::string lift;
  bool irreducible = false;
  std::string entanglement;
  std::string shape = "none";
  std::optional<std::uint64_t> delta_order;
  std::string character_ring;  // reference label, or "unlabeled"
  std::vector<std::string> ring_basis;
  std::string hierarchy_level;
  std::array<Rational, 3> frame_potentials{};
  bool perfect = false;
  bool contains_pauli = false;
  std::optional<GroupFingerprint> fingerprint;

  std::string order_string() const;
  nlohmann::json to_json() const;
};

/// Computes every report field for a closed group.
ClassificationReport classify_group(const std::string& name,
                                    const std::vector<std::string>& generators,
                                    const MatrixGroup& g, const ReportOptions& options,
                                    HierarchyProbe& probe);

/// Splits a list such as "⟨P2, BELL⟩" into items; a bare expression is one item.
std::vector<std::string> split_generator_list(std::string_view text);

struct FieldDiff {
  std::string field;
  std::string expected;
  std::string actual;
  nlohmann::json to_json() const;
};

struct Verification {
  std::string name;
  ClassificationReport report;
  std::vector<FieldDiff> diffs;
  std::optional<std::string> error;  // the group could not be built
  bool resource_exceeded = false;    // error came from a size bound

  bool passed() const { return diffs.empty() && !error; }
  nlohmann::json to_json() const;
};

/// Builds the entry's group, classifies it and diffs against the expected
/// invariants. Failures are reported in the result, never thrown. The JSON
/// form is the report object extended with "passed", "diffs" and "error".
Verification verify(const AtlasEntry& entry, const ReportOptions& options,
                    HierarchyProbe& probe);

/// Closure of the entry's generators.
MatrixGroup build_group(const AtlasEntry& entry, std::size_t cap = MatrixGroup::kDefaultCap);

/// Pairs of entries with equal structural fingerprints, with their ring labels.
struct FingerprintCollision {
  std::string first;
  std::string second;
  std::string first_ring;
  std::string second_ring;
};
std::vector<FingerprintCollision> fingerprint_collisions(
    const std::vector<const AtlasEntry*>& entries, std::size_t cap = MatrixGroup::kDefaultCap);

/// Result of enumerating the subgroups between <P2, iII> and C2.
struct LatticeSurvey {
  std::size_t total_subgroups = 0;
  std::size_t strictly_between = 0;
  struct ClassInfo {
    std::uint64_t order = 0;
    std::size_t conjugates = 0;
    std::string ring;
    std::vector<std::string> matches;  // atlas names with this fingerprint and ring
  };
  std::vector<ClassInfo> classes;
  std::size_t fingerprint_classes = 0;  // distinct fingerprints among classes
  std::vector<std::pair<std::size_t, std::size_t>> unresolved;  // class index pairs
  std::vector<std::string> unmatched_entries;

  bool fully_matched() const;
  nlohmann::json to_json() const;
};

LatticeSurvey survey_lattice(const Atlas& atlas);

}  // namespace cliffatlas
