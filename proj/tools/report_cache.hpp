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
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

namespace cliffatlas::cli {

/// Environment variable that overrides the default cache directory.
inline constexpr const char* kCacheEnv = "CLIFFATLAS_CACHE_DIR";

/// Hex SHA-256 of the engine version followed by each part, length-prefixed.
std::string cache_key(std::initializer_list<std::string_view> parts);

/// Write-through store of JSON results, one file per key. Writes go to a
/// temporary file that is renamed into place, so concurrent readers only ever
/// see complete entries and the last writer wins.
class ReportCache {
 public:
  /// A disabled cache stores nothing and never hits.
  static ReportCache disabled();
  explicit ReportCache(std::filesystem::path dir);

  /// $CLIFFATLAS_CACHE_DIR, else $XDG_CACHE_HOME/cliffatlas, else
  /// ~/.cache/cliffatlas; nullopt when none of these is set.
  static std::optional<std::filesystem::path> default_dir();

  bool enabled() const { return enabled_; }
  const std::filesystem::path& dir() const { return dir_; }

  std::optional<nlohmann::json> load(const std::string& key) const;
  /// Returns false if the entry could not be written; the cache is advisory.
  bool store(const std::string& key, const nlohmann::json& value) const;

  /// Number of stored entries and their total size in bytes.
  std::pair<std::size_t, std::uintmax_t> stats() const;
  /// Removes every stored entry; returns how many were removed.
  std::size_t clear() const;

 private:
  ReportCache() = default;
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
  bool enabled_ = false;
};

}  // namespace cliffatlas::cli
