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


#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cliffatlas/atlas.hpp"
#include "cliffatlas/classify.hpp"
#include "cliffatlas/gates.hpp"
#include "cliffatlas/version.hpp"
#include "report_cache.hpp"

namespace cliffatlas::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// A failure the user can fix by changing the command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::vector<std::string> names;
  std::string family;
  bool all = false;
  bool all_pauli = false;
  bool primitive = false;
  std::string series;
  std::vector<std::string> series_params;
  std::optional<std::uint64_t> expect_order;
  std::string target;  // describe / hierarchy argument
  std::string export_format;
  std::string output = "-";
  std::string cache_action = "stats";

  int max_level = 4;
  std::size_t cap = MatrixGroup::kDefaultCap;
  std::string cache_dir;
  bool no_cache = false;
  std::string format = "text";
  unsigned jobs = 0;
  std::string atlas_path;
};

class Context {
 public:
  Context(const RunConfig& config, std::ostream& out, std::ostream& err)
      : config_(config), out_(out), err_(err), cache_(make_cache(config)) {}

  const RunConfig& config() const { return config_; }
  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }
  const ReportCache& cache() const { return cache_; }

  const Atlas& atlas() {
    if (!atlas_) {
      atlas_ = config_.atlas_path.empty() ? Atlas::builtin() : Atlas::load(config_.atlas_path);
    }
    return *atlas_;
  }

  ReportOptions options() const {
    ReportOptions o;
    o.max_level = config_.max_level;
    o.cap = config_.cap;
    return o;
  }

  std::string options_key() const {
    return "max_level=" + std::to_string(config_.max_level) + ";fingerprint=1";
  }

  HierarchyProbe& probe() { return probe_; }

  unsigned jobs() const {
    if (config_.jobs > 0) return config_.jobs;
    return std::max(1u, std::thread::hardware_concurrency());
  }

 private:
  static ReportCache make_cache(const RunConfig& c) {
    if (c.no_cache) return ReportCache::disabled();
    if (!c.cache_dir.empty()) return ReportCache(c.cache_dir);
    if (auto dir = ReportCache::default_dir()) return ReportCache(*dir);
    return ReportCache::disabled();
  }

  const RunConfig& config_;
  std::ostream& out_;
  std::ostream& err_;
  ReportCache cache_;
  std::optional<Atlas> atlas_;
  HierarchyProbe probe_{4};
};

/// Runs fn(0..n-1) on up to `jobs` threads.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < n; k = next++) fn(k);
    });
  }
  for (auto& t : pool) t.join();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k > 0) out += ',';
    out += csv_field(fields[k]);
  }
  return out + "\n";
}

std::string text_of(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k > 0) out += sep;
    out += items[k];
  }
  return out;
}

std::string diffs_text(const json& v) {
  std::vector<std::string> parts;
  for (const auto& d : v.at("diffs")) {
    parts.push_back(d.at("field").get<std::string>() + ": expected " +
                    d.at("expected").get<std::string>() + ", got " +
                    d.at("actual").get<std::string>());
  }
  if (!v.at("error").is_null()) parts.push_back("error: " + v.at("error").get<std::string>());
  return join(parts, "; ");
}

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols = {
      "name",          "order_string",   "lift",   "irreducible",    "entanglement",
      "shape",         "delta_order",    "character_ring", "hierarchy_level", "perfect",
      "contains_pauli"};
  return cols;
}

std::vector<std::string> report_cells(const json& r) {
  std::vector<std::string> cells;
  for (const auto& c : report_columns()) cells.push_back(text_of(r.at(c)));
  const auto& fp = r.at("frame_potentials");
  for (const char* t : {"t1", "t2", "t3"}) cells.push_back(fp.at(t).get<std::string>());
  return cells;
}

std::vector<std::string> report_header() {
  auto h = report_columns();
  for (const char* t : {"frame_potential_t1", "frame_potential_t2", "frame_potential_t3"}) {
    h.push_back(t);
  }
  return h;
}

void print_report_text(const json& r, std::ostream& out) {
  out << "name: " << r.at("name").get<std::string>() << "\n";
  out << "generators: " << join(r.at("generators").get<std::vector<std::string>>(), ", ")
      << "\n";
  out << "order: " << r.at("order_string").get<std::string>() << "\n";
  for (const char* key : {"irreducible", "entanglement", "shape", "delta_order",
                          "character_ring", "hierarchy_level", "perfect", "contains_pauli"}) {
    out << key << ": " << text_of(r.at(key)) << "\n";
  }
  out << "ring_basis: " << join(r.at("ring_basis").get<std::vector<std::string>>(), ", ")
      << "\n";
  const auto& fp = r.at("frame_potentials");
  out << "frame_potentials: t1=" << fp.at("t1").get<std::string>()
      << " t2=" << fp.at("t2").get<std::string>() << " t3=" << fp.at("t3").get<std::string>()
      << "\n";
  if (r.contains("fingerprint") && !r.at("fingerprint").is_null()) {
    out << "fingerprint: " << r.at("fingerprint").dump() << "\n";
  }
}

/// Verification JSON for one entry, from the cache when possible.
json evaluate(Context& ctx, const AtlasEntry& entry) {
  const std::string key = cache_key({"verify", entry.to_json().dump(), ctx.options_key()});
  if (auto hit = ctx.cache().load(key)) return *hit;
  Verification v = verify(entry, ctx.options(), ctx.probe());
  json j = v.to_json();
  if (!v.resource_exceeded) ctx.cache().store(key, j);
  return j;
}

std::vector<json> evaluate_all(Context& ctx, const std::vector<AtlasEntry>& entries) {
  std::vector<json> results(entries.size());
  parallel_for(entries.size(), ctx.jobs(),
               [&](std::size_t k) { results[k] = evaluate(ctx, entries[k]); });
  return results;
}

std::vector<AtlasEntry> sorted_by_name(std::vector<AtlasEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const AtlasEntry& a, const AtlasEntry& b) { return a.name < b.name; });
  return entries;
}

int status_of(const std::vector<json>& results) {
  int code = kExitPass;
  for (const auto& r : results) {
    if (r.at("resource_exceeded").get<bool>()) return kExitResource;
    if (!r.at("passed").get<bool>()) code = kExitDiffs;
  }
  return code;
}

std::vector<AtlasEntry> select_entries(Context& ctx) {
  const RunConfig& c = ctx.config();
  const Atlas& atlas = ctx.atlas();
  std::vector<AtlasEntry> out;
  if (!c.series.empty()) {
    if (c.series_params.empty()) throw UsageError("--series needs --params, e.g. --params r=2");
    for (const auto& p : c.series_params) {
      try {
        out.push_back(atlas.instantiate_series(c.series, parse_params(p)));
      } catch (const std::exception& ex) {
        throw UsageError(ex.what());
      }
    }
  }
  const bool filtered = c.all || c.all_pauli || c.primitive || !c.family.empty();
  if (filtered) {
    EntryFilter f;
    f.pauli_table_only = c.all_pauli;
    f.primitive_table_only = c.primitive;
    if (!c.family.empty()) {
      f.family = parse_family(c.family);
      if (!f.family) throw UsageError("unknown family '" + c.family + "'");
    }
    for (const AtlasEntry* e : atlas.all_entries(f)) out.push_back(*e);
  }
  for (const auto& name : c.names) {
    const AtlasEntry* e = atlas.find(name);
    if (!e) throw UsageError("unknown atlas entry '" + name + "'");
    if (std::none_of(out.begin(), out.end(), [&](const AtlasEntry& x) { return x.name == name; })) {
      out.push_back(*e);
    }
  }
  if (out.empty()) {
    throw UsageError("nothing selected; name entries or use --all, --all-pauli, --family or --series");
  }
  if (c.expect_order) {
    for (auto& e : out) e.expected.order = *c.expect_order;
  }
  return sorted_by_name(std::move(out));
}

int cmd_verify(Context& ctx) {
  auto entries = select_entries(ctx);
  auto results = evaluate_all(ctx, entries);
  std::ostream& out = ctx.out();
  const std::string& format = ctx.config().format;
  if (format == "json") {
    out << json(results).dump(2) << "\n";
  } else if (format == "csv") {
    auto header = report_header();
    header.push_back("passed");
    header.push_back("diffs");
    out << csv_row(header);
    for (const auto& r : results) {
      auto cells = report_cells(r);
      cells.push_back(r.at("passed").get<bool>() ? "true" : "false");
      cells.push_back(diffs_text(r));
      out << csv_row(cells);
    }
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) {
      const bool ok = r.at("passed").get<bool>();
      passed += ok ? 1 : 0;
      out << (ok ? "PASS " : "FAIL ") << r.at("name").get<std::string>() << "  "
          << r.at("order_string").get<std::string>() << "\n";
      for (const auto& d : r.at("diffs")) {
        out << "  " << d.at("field").get<std::string>() << ": expected "
            << d.at("expected").get<std::string>() << ", got "
            << d.at("actual").get<std::string>() << "\n";
      }
      if (!r.at("error").is_null()) out << "  error: " << r.at("error").get<std::string>() << "\n";
    }
    out << results.size() << " verified: " << passed << " passed, " << results.size() - passed
        << " failed\n";
  }
  return status_of(results);
}

/// Catalog entry, or an ad-hoc entry built from a generator list.
AtlasEntry resolve_target(Context& ctx, const std::string& target) {
  if (const AtlasEntry* e = ctx.atlas().find(target)) return *e;
  AtlasEntry e;
  e.name = target;
  e.generators = split_generator_list(target);
  if (e.generators.empty()) throw UsageError("empty generator list");
  e.generator_matrices();  // surface parse errors before any work
  return e;
}

int cmd_describe(Context& ctx) {
  AtlasEntry entry = resolve_target(ctx, ctx.config().target);
  entry.expected = {};
  json r = evaluate(ctx, entry);
  if (r.at("resource_exceeded").get<bool>()) {
    ctx.err() << "error: " << r.at("error").get<std::string>() << "\n";
    return kExitResource;
  }
  if (!r.at("error").is_null()) throw UsageError(r.at("error").get<std::string>());
  r.erase("passed");
  r.erase("diffs");
  r.erase("error");
  r.erase("resource_exceeded");
  const std::string& format = ctx.config().format;
  if (format == "json") {
    ctx.out() << json::array({r}).dump(2) << "\n";
  } else if (format == "csv") {
    ctx.out() << csv_row(report_header()) << csv_row(report_cells(r));
  } else {
    print_report_text(r, ctx.out());
  }
  return kExitPass;
}

int cmd_hierarchy(Context& ctx) {
  const std::string& target = ctx.config().target;
  std::vector<GateMatrix> gens;
  if (const AtlasEntry* e = ctx.atlas().find(target)) {
    gens = e->generator_matrices();
  } else {
    for (const auto& item : split_generator_list(target)) {
      auto part = gates::expand(item);
      gens.insert(gens.end(), part.begin(), part.end());
    }
  }
  if (gens.empty()) throw UsageError("empty expression");
  HierarchyProbe local(gens.front().dim());
  HierarchyProbe& probe = gens.front().dim() == 4 ? ctx.probe() : local;
  const std::string level = probe.group_level(gens, ctx.config().max_level).to_string();
  if (ctx.config().format == "json") {
    ctx.out() << json{{"expression", target}, {"max_level", ctx.config().max_level},
                      {"level", level}}.dump(2)
              << "\n";
  } else if (ctx.config().format == "csv") {
    ctx.out() << csv_row({"expression", "max_level", "level"})
              << csv_row({target, std::to_string(ctx.config().max_level), level});
  } else {
    ctx.out() << level << "\n";
  }
  return kExitPass;
}

int cmd_lattice(Context& ctx) {
  const std::string key = cache_key({"lattice", ctx.atlas().to_json().dump()});
  json s;
  if (auto hit = ctx.cache().load(key)) {
    s = *hit;
  } else {
    s = survey_lattice(ctx.atlas()).to_json();
    ctx.cache().store(key, s);
  }
  const bool ok = s.at("fully_matched").get<bool>();
  std::ostream& out = ctx.out();
  const std::string& format = ctx.config().format;
  if (format == "json") {
    out << s.dump(2) << "\n";
  } else if (format == "csv") {
    out << csv_row({"class", "order", "conjugates", "ring", "matches"});
    std::size_t k = 0;
    for (const auto& c : s.at("classes")) {
      out << csv_row({std::to_string(++k), std::to_string(c.at("order").get<std::uint64_t>()),
                      std::to_string(c.at("conjugates").get<std::size_t>()),
                      c.at("ring").get<std::string>(),
                      join(c.at("matches").get<std::vector<std::string>>(), "; ")});
    }
  } else {
    out << "subgroups containing the base: " << s.at("total_subgroups") << "\n"
        << "strictly between: " << s.at("strictly_between") << "\n"
        << "conjugacy classes: " << s.at("conjugacy_classes") << "\n"
        << "fingerprint classes: " << s.at("fingerprint_classes") << "\n";
    std::size_t k = 0;
    for (const auto& c : s.at("classes")) {
      auto matches = c.at("matches").get<std::vector<std::string>>();
      out << "  class " << ++k << ": order " << c.at("order") << ", " << c.at("conjugates")
          << " conjugate(s), ring " << c.at("ring").get<std::string>() << " -> "
          << (matches.empty() ? "(no match)" : join(matches, ", ")) << "\n";
    }
    for (const auto& p : s.at("unresolved_pairs")) {
      out << "unresolved pair: classes " << p.at(0).get<std::size_t>() + 1 << " and "
          << p.at(1).get<std::size_t>() + 1 << "\n";
    }
    for (const auto& name : s.at("unmatched_entries")) {
      out << "unmatched entry: " << name.get<std::string>() << "\n";
    }
    out << (ok ? "every class matched to exactly one atlas entry\n"
               : "lattice does not match the atlas\n");
  }
  return ok ? kExitPass : kExitDiffs;
}

std::string gap_cyclotomic(const Cyclotomic& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [k, coeff] : c.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff.pretty() + ")";
    if (c.conductor() > 1) out += "*E(" + std::to_string(c.conductor()) + ")^" + std::to_string(k);
  }
  return out;
}

std::string gap_matrix(const GateMatrix& m) {
  std::string out = "[";
  for (int r = 0; r < m.dim(); ++r) {
    out += r ? ", [" : "[";
    for (int c = 0; c < m.dim(); ++c) {
      if (c) out += ", ";
      out += gap_cyclotomic(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

std::string gap_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void write_gap_script(Context& ctx, std::ostream& out) {
  out << "# Rebuilds every atlas group from exact matrices and checks its order and\n"
         "# the catalog identifiers. Run with: gap -q < script.g\n"
         "ProjectiveImage := function(G)\n"
         "  local scalars;\n"
         "  scalars := Filtered(Elements(Centre(G)), z -> z = z[1][1] * One(z));\n"
         "  return Image(NaturalHomomorphismByNormalSubgroup(G, Subgroup(G, scalars)));\n"
         "end;;\n"
         "CheckId := function(label, H, id)\n"
         "  local ok, v;\n"
         "  if StartsWith(id, \"[\") then\n"
         "    ok := IdGroup(H) = EvalString(id);\n"
         "  elif StartsWith(id, \"(\") then\n"
         "    v := EvalString(Concatenation(\"[\", id{[2 .. Length(id) - 1]}, \"]\"));\n"
         "    if Length(v) = 1 then\n"
         "      ok := IsPerfectGroup(H) and Size(H) = v[1];\n"
         "    else\n"
         "      ok := PerfectIdentification(H) = v;\n"
         "    fi;\n"
         "  else\n"
         "    ok := IsomorphismGroups(H, EvalString(id)) <> fail;\n"
         "  fi;\n"
         "  if ok then Print(\"PASS \", label, \"\\n\"); else Print(\"FAIL \", label, \"\\n\"); fi;\n"
         "end;;\n"
         "CheckOrder := function(label, H, n)\n"
         "  if Size(H) = n then Print(\"PASS \", label, \"\\n\"); else Print(\"FAIL \", label, \"\\n\"); fi;\n"
         "end;;\n";
  std::vector<AtlasEntry> entries = sorted_by_name(ctx.atlas().entries());
  for (const auto& e : entries) {
    out << "\n# " << e.name << "\n";
    std::vector<std::string> mats;
    for (const auto& m : e.generator_matrices()) mats.push_back(gap_matrix(m));
    out << "G := Group([\n  " << join(mats, ",\n  ") << "]);;\n";
    if (e.expected.order) {
      out << "CheckOrder(" << gap_string(e.name + " order") << ", G, " << *e.expected.order
          << ");\n";
    }
    if (auto it = e.external_ids.find("group_id"); it != e.external_ids.end()) {
      out << "CheckId(" << gap_string(e.name + " group " + it->second) << ", G, "
          << gap_string(it->second) << ");\n";
    }
    if (auto it = e.external_ids.find("projective_group_id"); it != e.external_ids.end()) {
      out << "CheckId(" << gap_string(e.name + " projective " + it->second)
          << ", ProjectiveImage(G), " << gap_string(it->second) << ");\n";
    }
  }
}

int cmd_export(Context& ctx) {
  const RunConfig& c = ctx.config();
  std::ostringstream buf;
  int code = kExitPass;
  if (c.export_format == "gap") {
    write_gap_script(ctx, buf);
  } else {
    EntryFilter filter;
    filter.pauli_table_only = c.export_format == "csv";
    std::vector<AtlasEntry> entries;
    for (const AtlasEntry* e : ctx.atlas().all_entries(filter)) entries.push_back(*e);
    entries = sorted_by_name(std::move(entries));
    auto results = evaluate_all(ctx, entries);
    code = status_of(results);
    if (c.export_format == "csv") {
      buf << csv_row({"class", "name", "gates", "order", "projective_id"});
      for (std::size_t k = 0; k < entries.size(); ++k) {
        const AtlasEntry& e = entries[k];
        auto pid = e.external_ids.find("projective_group_id");
        buf << csv_row({e.class_name, e.name, join(e.generators, ", "),
                        results[k].at("order_string").get<std::string>(),
                        pid == e.external_ids.end() ? "" : pid->second});
      }
    } else {
      json rows = json::array();
      for (std::size_t k = 0; k < entries.size(); ++k) {
        json r = results[k];
        const AtlasEntry& e = entries[k];
        r["family"] = to_string(e.family);
        r["class_name"] = e.class_name;
        r["expected"] = e.expected.to_json();
        r["citations"] = e.citations;
        r["external_ids"] = e.external_ids;
        r["pauli_table"] = e.pauli_table;
        r["primitive_table"] = e.primitive_table;
        rows.push_back(std::move(r));
      }
      buf << rows.dump(2) << "\n";
    }
  }
  if (c.output == "-") {
    ctx.out() << buf.str();
  } else {
    std::ofstream file(c.output, std::ios::binary | std::ios::trunc);
    if (!file || !(file << buf.str()) || !file.flush()) {
      throw std::runtime_error("cannot write " + c.output);
    }
    ctx.err() << "wrote " << c.output << "\n";
  }
  return code;
}

int cmd_list(Context& ctx) {
  const RunConfig& c = ctx.config();
  EntryFilter f;
  f.pauli_table_only = c.all_pauli;
  f.primitive_table_only = c.primitive;
  if (!c.family.empty()) {
    f.family = parse_family(c.family);
    if (!f.family) throw UsageError("unknown family '" + c.family + "'");
  }
  std::vector<AtlasEntry> entries;
  for (const AtlasEntry* e : ctx.atlas().all_entries(f)) entries.push_back(*e);
  entries = sorted_by_name(std::move(entries));
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& e : entries) rows.push_back(e.to_json());
    ctx.out() << rows.dump(2) << "\n";
  } else if (c.format == "csv") {
    ctx.out() << csv_row({"name", "family", "generators", "expected_order"});
    for (const auto& e : entries) {
      ctx.out() << csv_row({e.name, to_string(e.family), join(e.generators, ", "),
                            e.expected_order_string()});
    }
  } else {
    for (const auto& e : entries) {
      ctx.out() << e.name << "  " << to_string(e.family) << "  <" << join(e.generators, ", ")
                << ">\n";
    }
    if (c.family.empty() && !c.all_pauli && !c.primitive) {
      for (const auto& s : ctx.atlas().series()) {
        ctx.out() << "series " << s.id << "  " << s.name << "  params " << join(s.parameters, ",")
                  << "\n";
      }
    }
  }
  return kExitPass;
}

int cmd_cache(Context& ctx) {
  const ReportCache& cache = ctx.cache();
  const std::string& action = ctx.config().cache_action;
  if (!cache.enabled()) {
    ctx.out() << "cache disabled\n";
    return kExitPass;
  }
  if (action == "path") {
    ctx.out() << cache.dir().string() << "\n";
  } else if (action == "clear") {
    ctx.out() << "removed " << cache.clear() << " entries from " << cache.dir().string() << "\n";
  } else {
    auto [count, bytes] = cache.stats();
    ctx.out() << cache.dir().string() << ": " << count << " entries, " << bytes << " bytes\n";
  }
  return kExitPass;
}

void add_filters(CLI::App* sub, RunConfig& c) {
  sub->add_option("--family", c.family, "Family, e.g. monomial-s4 or MonomialS4");
  sub->add_flag("--all-pauli", c.all_pauli, "The 56 subgroups of C2 containing P2");
  sub->add_flag("--primitive", c.primitive, "The 31 primitive subgroups of SU(4)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact classification of finite two-qubit gate groups", "cliffatlas"};
  app.set_version_flag("--version", std::string(kEngineVersion));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-level", c.max_level, "Largest hierarchy level probed")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap", c.cap, "Largest group order any closure may reach")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache", c.cache_dir, std::string("Cache directory (default $") + kCacheEnv +
                                             ", then the user cache directory)");
  app.add_flag("--no-cache", c.no_cache, "Neither read nor write the cache");
  app.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs,-j", c.jobs, "Worker threads (default: hardware threads)");
  app.add_option("--atlas", c.atlas_path, "Catalog file replacing the built-in one")
      ->check(CLI::ExistingFile);

  auto* verify_cmd = app.add_subcommand("verify", "Verify catalog entries against computation");
  verify_cmd->add_option("names", c.names, "Entry names");
  add_filters(verify_cmd, c);
  verify_cmd->add_flag("--all", c.all, "Every catalog entry");
  verify_cmd->add_option("--series", c.series, "Series id; see 'list'");
  verify_cmd->add_option("--params", c.series_params, "Series parameters such as r=2 or r1=2,r2=3");
  verify_cmd->add_option("--expect-order", c.expect_order, "Override the expected order");

  auto* describe_cmd = app.add_subcommand("describe", "Classify a catalog entry or generator list");
  describe_cmd->add_option("target", c.target, "Entry name or list such as \"<P2, BELL>\"")
      ->required();

  auto* hierarchy_cmd = app.add_subcommand("hierarchy", "Smallest hierarchy level of a gate or group");
  hierarchy_cmd->add_option("expression", c.target, "Gate expression, generator list or entry name")
      ->required();

  app.add_subcommand("lattice", "Enumerate subgroups between the Pauli group and C2");

  auto* export_cmd = app.add_subcommand("export", "Write the catalog with computed invariants");
  export_cmd->add_option("format", c.export_format, "json, csv or gap")
      ->required()
      ->check(CLI::IsMember({"json", "csv", "gap"}));
  export_cmd->add_option("path", c.output, "Output file, or - for standard output");

  auto* list_cmd = app.add_subcommand("list", "List catalog entries and series");
  add_filters(list_cmd, c);

  auto* cache_cmd = app.add_subcommand("cache", "Inspect or clear the result cache");
  cache_cmd->add_option("action", c.cache_action, "stats, path or clear")
      ->check(CLI::IsMember({"stats", "path", "clear"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    Context ctx(c, out, err);
    if (c.command == "verify") return cmd_verify(ctx);
    if (c.command == "describe") return cmd_describe(ctx);
    if (c.command == "hierarchy") return cmd_hierarchy(ctx);
    if (c.command == "lattice") return cmd_lattice(ctx);
    if (c.command == "export") return cmd_export(ctx);
    if (c.command == "list") return cmd_list(ctx);
    return cmd_cache(ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cliffatlas::cli
