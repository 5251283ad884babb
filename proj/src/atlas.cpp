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

#include "cliffatlas/atlas.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cliffatlas/gates.hpp"
#include "cliffatlas/lattice.hpp"

namespace cliffatlas {

namespace detail {
extern const std::string_view kBuiltinAtlasJson;
}

using nlohmann::json;

namespace {

const std::vector<std::pair<Family, std::string>>& family_names() {
  static const std::vector<std::pair<Family, std::string>> names = {
      {Family::PrimitiveLocal, "PrimitiveLocal"},
      {Family::PrimitiveNonEntangling, "PrimitiveNonEntangling"},
      {Family::PrimitiveEntangling, "PrimitiveEntangling"},
      {Family::MonomialS4, "MonomialS4"},
      {Family::MonomialA4, "MonomialA4"},
      {Family::MonomialD4, "MonomialD4"},
      {Family::MonomialV4, "MonomialV4"},
      {Family::NonMonomialLocal, "NonMonomialLocal"},
      {Family::NonMonomialEntangling, "NonMonomialEntangling"},
      {Family::CliffordNoPauli, "CliffordNoPauli"},
      {Family::Exotic, "Exotic"},
  };
  return names;
}

std::string kebab(const std::string& camel) {
  std::string out;
  for (std::size_t k = 0; k < camel.size(); ++k) {
    char c = camel[k];
    if (std::isupper(static_cast<unsigned char>(c))) {
      if (k > 0) out += '-';
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      out += c;
    }
  }
  return out;
}

long scalar_order_of(const std::string& lift) {
  if (lift == "σ") return 4;
  if (lift == "τ") return 2;
  return 1;
}

std::string order_string(std::uint64_t order, std::uint64_t projective, const std::string& lift) {
  if (lift.empty()) return std::to_string(order);
  return std::to_string(order) + "=" + std::to_string(projective) + lift;
}

template <typename T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void get(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key)) v = j.at(key).get<T>();
}

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<std::string>>();
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size())) {
    s.replace(at, from.size(), to);
  }
  return s;
}

const MatrixGroup& pauli_group() {
  static const MatrixGroup p = MatrixGroup::generate(gates::pauli2());
  return p;
}

bool contains_all_paulis(const MatrixGroup& g) {
  if (g.dim() != 4) return false;
  for (const auto& m : pauli_group().elements()) {
    if (!g.contains(m)) return false;
  }
  return true;
}

std::string ring_name(const CharacterRing& r) { return r.label.value_or("unlabeled"); }

struct ClassifiedGroup {
  ClassificationReport report;
  std::optional<MonomialStructure> monomial;
};

ClassifiedGroup classify_full(const std::string& name, const std::vector<std::string>& generators,
                              const MatrixGroup& g, const ReportOptions& options,
                              HierarchyProbe& probe) {
  ClassifiedGroup out;
  ClassificationReport& r = out.report;
  r.name = name;
  r.generators = generators;
  r.order = g.order();
  r.projective_order = g.projective_order();
  r.lift = lift_symbol_string(g.lift().symbol);
  r.irreducible = is_irreducible(g);
  r.entanglement = g.dim() == 4 ? to_string(entanglement_class(g)) : "n/a";
  out.monomial = monomial_shape(g);
  if (out.monomial) {
    r.shape = out.monomial->shape.description;
    r.delta_order = out.monomial->delta.order();
  }
  auto ring = character_ring(g);
  r.character_ring = ring_name(ring);
  for (const auto& b : ring.basis) r.ring_basis.push_back(b.pretty());
  if (g.dim() == 4) {
    r.hierarchy_level = probe.group_level(g.generators(), options.max_level).to_string();
  } else {
    HierarchyProbe local(g.dim());
    r.hierarchy_level = local.group_level(g.generators(), options.max_level).to_string();
  }
  for (int t = 1; t <= 3; ++t) r.frame_potentials[static_cast<std::size_t>(t - 1)] = frame_potential(g, t);
  r.perfect = g.is_perfect();
  r.contains_pauli = contains_all_paulis(g);
  if (options.fingerprint) {
    r.fingerprint = g.fingerprint();
    r.fingerprint->ring_label = r.character_ring;
  }
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_string(Family f) {
  for (const auto& [fam, name] : family_names()) {
    if (fam == f) return name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  for (const auto& [fam, name] : family_names()) {
    if (text == name || text == kebab(name)) return fam;
  }
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> out = [] {
    std::vector<Family> v;
    for (const auto& [fam, name] : family_names()) v.push_back(fam);
    return v;
  }();
  return out;
}

json ExpectedInvariants::to_json() const {
  json j = json::object();
  put(j, "order", order);
  put(j, "projective_order", projective_order);
  put(j, "lift", lift);
  put(j, "irreducible", irreducible);
  put(j, "entanglement", entanglement);
  put(j, "contains_pauli", contains_pauli);
  put(j, "level", level);
  put(j, "shape", shape);
  if (!delta_generators.empty()) j["delta_generators"] = delta_generators;
  put(j, "delta_order", delta_order);
  put(j, "ring", ring);
  put(j, "design", design);
  put(j, "perfect", perfect);
  return j;
}

ExpectedInvariants ExpectedInvariants::from_json(const json& j) {
  ExpectedInvariants e;
  get(j, "order", e.order);
  get(j, "projective_order", e.projective_order);
  get(j, "lift", e.lift);
  get(j, "irreducible", e.irreducible);
  get(j, "entanglement", e.entanglement);
  get(j, "contains_pauli", e.contains_pauli);
  if (j.contains("level")) {
    const auto& l = j.at("level");
    e.level = l.is_number_integer() ? std::to_string(l.get<int>()) : l.get<std::string>();
  }
  get(j, "shape", e.shape);
  e.delta_generators = string_list(j, "delta_generators");
  get(j, "delta_order", e.delta_order);
  get(j, "ring", e.ring);
  get(j, "design", e.design);
  get(j, "perfect", e.perfect);
  return e;
}

std::vector<GateMatrix> AtlasEntry::generator_matrices() const {
  std::vector<GateMatrix> out;
  for (const auto& g : generators) {
    auto part = gates::expand(g);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string AtlasEntry::expected_order_string() const {
  if (!expected.order || !expected.projective_order) return "";
  return order_string(*expected.order, *expected.projective_order, expected.lift.value_or(""));
}

json AtlasEntry::to_json() const {
  return json{{"name", name},
              {"family", to_string(family)},
              {"class_name", class_name},
              {"generators", generators},
              {"expected", expected.to_json()},
              {"citations", citations},
              {"external_ids", external_ids},
              {"pauli_table", pauli_table},
              {"primitive_table", primitive_table}};
}

AtlasEntry AtlasEntry::from_json(const json& j) {
  AtlasEntry e;
  e.name = j.at("name").get<std::string>();
  auto fam = parse_family(j.at("family").get<std::string>());
  if (!fam) throw std::invalid_argument("atlas: unknown family for " + e.name);
  e.family = *fam;
  e.class_name = j.value("class_name", "");
  e.generators = string_list(j, "generators");
  if (j.contains("expected")) e.expected = ExpectedInvariants::from_json(j.at("expected"));
  e.citations = string_list(j, "citations");
  if (j.contains("external_ids")) {
    e.external_ids = j.at("external_ids").get<std::map<std::string, std::string>>();
  }
  e.pauli_table = j.value("pauli_table", false);
  e.primitive_table = j.value("primitive_table", false);
  return e;
}

std::uint64_t SeriesSpec::projective_order(const SeriesParams& p) const {
  long e = log2_linear[2];
  for (std::size_t k = 0; k < parameters.size() && k < 2; ++k) {
    e += log2_linear[k] * p.at(parameters[k]);
  }
  if (e < 0 || e > 60) throw std::out_of_range("series order exponent out of range");
  return coefficient << e;
}

std::uint64_t SeriesSpec::order(const SeriesParams& p) const {
  return projective_order(p) * static_cast<std::uint64_t>(scalar_order_of(lift));
}

int SeriesSpec::expected_level(const SeriesParams& p) const {
  int level = base_level;
  for (const auto& name : parameters) level = std::max(level, p.at(name));
  return level;
}

SeriesSpec SeriesSpec::from_json(const json& j) {
  SeriesSpec s;
  s.id = j.at("id").get<std::string>();
  s.name = j.at("name").get<std::string>();
  auto fam = parse_family(j.at("family").get<std::string>());
  if (!fam) throw std::invalid_argument("atlas: unknown family for series " + s.id);
  s.family = *fam;
  s.parameters = string_list(j, "parameters");
  if (s.parameters.empty() || s.parameters.size() > 2) {
    throw std::invalid_argument("atlas: series " + s.id + " needs one or two parameters");
  }
  s.generators = string_list(j, "generators");
  const auto& po = j.at("projective_order");
  s.coefficient = po.at("coefficient").get<std::uint64_t>();
  auto lin = po.at("log2_linear").get<std::vector<long>>();
  if (lin.size() != 3) throw std::invalid_argument("atlas: log2_linear needs three terms");
  std::copy(lin.begin(), lin.end(), s.log2_linear.begin());
  s.lift = j.value("lift", "");
  s.base_level = j.value("base_level", 2);
  s.min_value = j.value("min_value", 1);
  if (j.contains("instances")) {
    s.instances = j.at("instances").get<std::map<std::string, std::string>>();
  }
  s.citations = string_list(j, "citations");
  return s;
}

json SeriesSpec::to_json() const {
  return json{{"id", id},
              {"name", name},
              {"family", cliffatlas::to_string(family)},
              {"parameters", parameters},
              {"generators", generators},
              {"projective_order", {{"coefficient", coefficient}, {"log2_linear", log2_linear}}},
              {"lift", lift},
              {"base_level", base_level},
              {"min_value", min_value},
              {"instances", instances},
              {"citations", citations}};
}

std::string format_params(const SeriesSpec& s, const SeriesParams& p) {
  std::string out;
  for (const auto& name : s.parameters) {
    if (!out.empty()) out += ',';
    out += name + "=" + std::to_string(p.at(name));
  }
  return out;
}

SeriesParams parse_params(std::string_view text) {
  SeriesParams out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw std::invalid_argument("bad series parameter '" + item + "'");
    }
    try {
      std::size_t used = 0;
      int v = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing text");
      out[item.substr(0, eq)] = v;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad series parameter '" + item + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty series parameters");
  return out;
}

const Atlas& Atlas::builtin() {
  static const Atlas atlas = parse(detail::kBuiltinAtlasJson);
  return atlas;
}

Atlas Atlas::parse(std::string_view json_text) {
  json j = json::parse(json_text);
  Atlas a;
  a.schema_version_ = j.at("schema_version").get<int>();
  if (a.schema_version_ != 1) {
    throw std::invalid_argument("atlas: unsupported schema version " +
                                std::to_string(a.schema_version_));
  }
  for (const auto& e : j.at("entries")) a.entries_.push_back(AtlasEntry::from_json(e));
  if (j.contains("series")) {
    for (const auto& s : j.at("series")) a.series_.push_back(SeriesSpec::from_json(s));
  }
  std::vector<std::string> names;
  for (const auto& e : a.entries_) names.push_back(e.name);
  std::sort(names.begin(), names.end());
  auto dup = std::adjacent_find(names.begin(), names.end());
  if (dup != names.end()) throw std::invalid_argument("atlas: duplicate name " + *dup);
  return a;
}

Atlas Atlas::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read atlas file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const AtlasEntry* Atlas::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const AtlasEntry& Atlas::entry(std::string_view name) const {
  const AtlasEntry* e = find(name);
  if (!e) throw std::out_of_range("unknown atlas entry '" + std::string(name) + "'");
  return *e;
}

std::vector<const AtlasEntry*> Atlas::all_entries(const EntryFilter& filter) const {
  std::vector<const AtlasEntry*> out;
  for (const auto& e : entries_) {
    if (filter.family && e.family != *filter.family) continue;
    if (filter.pauli_table_only && !e.pauli_table) continue;
    if (filter.primitive_table_only && !e.primitive_table) continue;
    if (!filter.names.empty() &&
        std::find(filter.names.begin(), filter.names.end(), e.name) == filter.names.end()) {
      continue;
    }
    out.push_back(&e);
  }
  return out;
}

const SeriesSpec& Atlas::series_spec(std::string_view id) const {
  for (const auto& s : series_) {
    if (s.id == id) return s;
  }
  throw std::out_of_range("unknown series '" + std::string(id) + "'");
}

AtlasEntry Atlas::instantiate_series(std::string_view id, const SeriesParams& params,
                                     int max_r) const {
  const SeriesSpec& s = series_spec(id);
  if (params.size() != s.parameters.size()) {
    throw std::out_of_range("series " + s.id + " takes " + std::to_string(s.parameters.size()) +
                            " parameter(s)");
  }
  for (const auto& name : s.parameters) {
    auto it = params.find(name);
    if (it == params.end()) throw std::out_of_range("series " + s.id + " needs " + name);
    if (it->second < s.min_value || it->second > max_r) {
      throw std::out_of_range("series parameter " + name + "=" + std::to_string(it->second) +
                              " outside [" + std::to_string(s.min_value) + ", " +
                              std::to_string(max_r) + "]");
    }
  }
  AtlasEntry e;
  e.name = s.name + "[" + format_params(s, params) + "]";
  e.family = s.family;
  e.class_name = "Series " + s.id;
  for (std::string g : s.generators) {
    for (const auto& [name, value] : params) {
      g = replace_all(g, "{" + name + "}", std::to_string(value));
    }
    e.generators.push_back(g);
  }
  e.expected.order = s.order(params);
  e.expected.projective_order = s.projective_order(params);
  e.expected.lift = s.lift;
  e.expected.irreducible = true;
  e.expected.contains_pauli = true;
  e.expected.level = std::to_string(s.expected_level(params));
  switch (s.family) {
    case Family::MonomialS4: e.expected.shape = "S4"; break;
    case Family::MonomialA4: e.expected.shape = "A4"; break;
    case Family::MonomialD4: e.expected.shape = "D4"; break;
    case Family::MonomialV4: e.expected.shape = "V4"; break;
    default: e.expected.shape = "none"; break;
  }
  e.citations = s.citations;
  return e;
}

json Atlas::to_json() const {
  json entries = json::array();
  for (const auto& e : entries_) entries.push_back(e.to_json());
  json series = json::array();
  for (const auto& s : series_) series.push_back(s.to_json());
  return json{{"schema_version", schema_version_}, {"entries", entries}, {"series", series}};
}

std::string ClassificationReport::order_string() const {
  return cliffatlas::order_string(order, projective_order, lift);
}

json ClassificationReport::to_json() const {
  json j{{"name", name},
         {"generators", generators},
         {"order", order},
         {"projective_order", projective_order},
         {"order_string", order_string()},
         {"lift", lift},
         {"irreducible", irreducible},
         {"entanglement", entanglement},
         {"shape", shape},
         {"delta_order", delta_order ? json(*delta_order) : json(nullptr)},
         {"character_ring", character_ring},
         {"ring_basis", ring_basis},
         {"hierarchy_level", hierarchy_level},
         {"frame_potentials",
          {{"t1", frame_potentials[0].pretty()},
           {"t2", frame_potentials[1].pretty()},
           {"t3", frame_potentials[2].pretty()}}},
         {"perfect", perfect},
         {"contains_pauli", contains_pauli}};
  j["fingerprint"] = fingerprint ? fingerprint->to_json() : json(nullptr);
  return j;
}

ClassificationReport classify_group(const std::string& name,
                                    const std::vector<std::string>& generators,
                                    const MatrixGroup& g, const ReportOptions& options,
                                    HierarchyProbe& probe) {
  return classify_full(name, generators, g, options, probe).report;
}

std::vector<std::string> split_generator_list(std::string_view text) {
  std::string s(text);
  for (const char* open : {"⟨", "<"}) {
    if (s.rfind(open, 0) == 0) {
      s.erase(0, std::string_view(open).size());
      break;
    }
  }
  for (const char* close : {"⟩", ">"}) {
    std::string_view c(close);
    if (s.size() >= c.size() && s.compare(s.size() - c.size(), c.size(), c) == 0) {
      s.erase(s.size() - c.size());
      break;
    }
  }
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.push_back(cur);
  for (auto& item : out) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    item = b == std::string::npos ? "" : item.substr(b, e - b + 1);
  }
  out.erase(std::remove(out.begin(), out.end(), std::string()), out.end());
  return out;
}

json FieldDiff::to_json() const {
  return json{{"field", field}, {"expected", expected}, {"actual", actual}};
}

json Verification::to_json() const {
  json diffs_json = json::array();
  for (const auto& d : diffs) diffs_json.push_back(d.to_json());
  json j = report.to_json();
  j["passed"] = passed();
  j["diffs"] = diffs_json;
  j["error"] = error ? json(*error) : json(nullptr);
  j["resource_exceeded"] = resource_exceeded;
  return j;
}

MatrixGroup build_group(const AtlasEntry& entry, std::size_t cap) {
  return MatrixGroup::generate(entry.generator_matrices(), cap);
}

Verification verify(const AtlasEntry& entry, const ReportOptions& options,
                    HierarchyProbe& probe) {
  Verification v;
  v.name = entry.name;
  v.report.name = entry.name;
  v.report.generators = entry.generators;
  std::optional<MatrixGroup> g;
  ClassifiedGroup c;
  try {
    g = build_group(entry, options.cap);
    c = classify_full(entry.name, entry.generators, *g, options, probe);
  } catch (const ResourceError& ex) {
    v.error = ex.what();
    v.resource_exceeded = true;
    return v;
  } catch (const std::exception& ex) {
    v.error = ex.what();
    return v;
  }
  v.report = c.report;
  const ClassificationReport& r = v.report;
  const ExpectedInvariants& x = entry.expected;
  auto check = [&](const char* field, const std::string& expected, const std::string& actual) {
    if (expected != actual) v.diffs.push_back({field, expected, actual});
  };
  if (x.order) check("order", std::to_string(*x.order), std::to_string(r.order));
  if (x.projective_order) {
    check("projective_order", std::to_string(*x.projective_order),
          std::to_string(r.projective_order));
  }
  if (x.lift) check("lift", *x.lift, r.lift);
  if (x.irreducible) check("irreducible", bool_text(*x.irreducible), bool_text(r.irreducible));
  if (x.entanglement) check("entanglement", *x.entanglement, r.entanglement);
  if (x.contains_pauli) {
    check("contains_pauli", bool_text(*x.contains_pauli), bool_text(r.contains_pauli));
  }
  if (x.level) check("hierarchy_level", *x.level, r.hierarchy_level);
  if (x.shape) check("shape", *x.shape, r.shape);
  if (x.delta_order) {
    check("delta_order", std::to_string(*x.delta_order),
          r.delta_order ? std::to_string(*r.delta_order) : "none");
  }
  if (!x.delta_generators.empty()) {
    std::string actual = "not monomial";
    if (c.monomial) {
      try {
        std::vector<GateMatrix> gens;
        for (const auto& item : x.delta_generators) {
          auto part = gates::expand(item);
          gens.insert(gens.end(), part.begin(), part.end());
        }
        actual = g->subgroup(gens).same_group(c.monomial->delta) ? "equal" : "different";
      } catch (const std::exception& ex) {
        actual = ex.what();
      }
    }
    check("delta", "equal", actual);
  }
  if (x.ring) check("character_ring", *x.ring, r.character_ring);
  if (x.design) {
    for (int t = 1; t <= *x.design && t <= 3; ++t) {
      const std::string field = "frame_potential_t" + std::to_string(t);
      if (!(r.frame_potentials[static_cast<std::size_t>(t - 1)] == Rational(haar_moment(t)))) {
        v.diffs.push_back({field, std::to_string(haar_moment(t)),
                           r.frame_potentials[static_cast<std::size_t>(t - 1)].pretty()});
      }
    }
  }
  for (int t = 1; t <= 3; ++t) {
    const Rational& f = r.frame_potentials[static_cast<std::size_t>(t - 1)];
    if (f < Rational(haar_moment(t))) {
      v.diffs.push_back({"frame_potential_bound_t" + std::to_string(t),
                         ">= " + std::to_string(haar_moment(t)), f.pretty()});
    }
  }
  if (x.perfect) check("perfect", bool_text(*x.perfect), bool_text(r.perfect));
  return v;
}

std::vector<FingerprintCollision> fingerprint_collisions(
    const std::vector<const AtlasEntry*>& entries, std::size_t cap) {
  struct Item {
    std::string name;
    GroupFingerprint fp;
  };
  std::vector<Item> items;
  for (const AtlasEntry* e : entries) {
    MatrixGroup g = build_group(*e, cap);
    GroupFingerprint fp = g.fingerprint();
    fp.ring_label = ring_name(character_ring(g));
    items.push_back({e->name, std::move(fp)});
  }
  std::vector<FingerprintCollision> out;
  for (std::size_t a = 0; a < items.size(); ++a) {
    for (std::size_t b = a + 1; b < items.size(); ++b) {
      if (items[a].fp.structural_equal(items[b].fp)) {
        out.push_back({items[a].name, items[b].name, items[a].fp.ring_label,
                       items[b].fp.ring_label});
      }
    }
  }
  return out;
}

bool LatticeSurvey::fully_matched() const {
  if (!unresolved.empty() || !unmatched_entries.empty()) return false;
  return std::all_of(classes.begin(), classes.end(),
                     [](const ClassInfo& c) { return c.matches.size() == 1; });
}

json LatticeSurvey::to_json() const {
  json cls = json::array();
  for (const auto& c : classes) {
    cls.push_back(json{{"order", c.order},
                       {"conjugates", c.conjugates},
                       {"ring", c.ring},
                       {"matches", c.matches}});
  }
  json pairs = json::array();
  for (const auto& [a, b] : unresolved) pairs.push_back(json::array({a, b}));
  return json{{"total_subgroups", total_subgroups},
              {"strictly_between", strictly_between},
              {"conjugacy_classes", classes.size()},
              {"fingerprint_classes", fingerprint_classes},
              {"classes", cls},
              {"unresolved_pairs", pairs},
              {"unmatched_entries", unmatched_entries},
              {"fully_matched", fully_matched()}};
}

LatticeSurvey survey_lattice(const Atlas& atlas) {
  MatrixGroup c2 = build_group(atlas.entry("C2"));
  MatrixGroup base = c2.subgroup(gates::pauli2_phased());
  IntermediateLattice lattice = intermediate_lattice(c2, base);

  LatticeSurvey s;
  s.total_subgroups = lattice.subgroups.size();
  s.strictly_between = lattice.strictly_between();

  std::vector<GroupFingerprint> class_fps;
  for (const auto& cls : lattice.classes) {
    MatrixGroup h = lattice.subgroups[cls.front()].materialize();
    GroupFingerprint fp = h.fingerprint();
    fp.ring_label = ring_name(character_ring(h));
    LatticeSurvey::ClassInfo info;
    info.order = h.order();
    info.conjugates = cls.size();
    info.ring = fp.ring_label;
    s.classes.push_back(info);
    class_fps.push_back(std::move(fp));
  }

  std::vector<std::size_t> distinct;
  for (std::size_t a = 0; a < class_fps.size(); ++a) {
    bool fresh = true;
    for (std::size_t b : distinct) {
      if (class_fps[a].structural_equal(class_fps[b])) fresh = false;
    }
    if (fresh) distinct.push_back(a);
    for (std::size_t b = 0; b < a; ++b) {
      if (class_fps[a] == class_fps[b]) s.unresolved.emplace_back(b, a);
    }
  }
  s.fingerprint_classes = distinct.size();

  // Atlas groups are matched through their closure with iII, which is the
  // preimage of their projective image.
  EntryFilter pauli;
  pauli.pauli_table_only = true;
  for (const AtlasEntry* e : atlas.all_entries(pauli)) {
    auto gens = e->generator_matrices();
    gens.push_back(gates::constant("iII"));
    MatrixGroup h = c2.subgroup(gens);
    GroupFingerprint fp = h.fingerprint();
    fp.ring_label = ring_name(character_ring(h));
    bool matched = false;
    for (std::size_t k = 0; k < class_fps.size(); ++k) {
      if (class_fps[k] == fp) {
        s.classes[k].matches.push_back(e->name);
        matched = true;
      }
    }
    if (!matched) s.unmatched_entries.push_back(e->name);
  }
  return s;
}

}  // namespace cliffatlas
