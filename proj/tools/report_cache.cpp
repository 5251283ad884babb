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


#include "report_cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <random>
#include <stdexcept>
#include <system_error>
#include <vector>

#include "cliffatlas/version.hpp"

namespace cliffatlas::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::string_view kSuffix = ".json";

std::string to_hex(const unsigned char* data, unsigned len) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (unsigned k = 0; k < len; ++k) {
    out += digits[data[k] >> 4];
    out += digits[data[k] & 0xf];
  }
  return out;
}

std::string unique_suffix() {
  static std::atomic<unsigned long> counter{0};
  static const unsigned long seed = std::random_device{}();
  return std::to_string(seed) + "-" + std::to_string(counter.fetch_add(1));
}

}  // namespace

std::string cache_key(std::initializer_list<std::string_view> parts) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 unavailable");
  }
  auto feed = [&](std::string_view s) {
    const std::string len = std::to_string(s.size()) + ":";
    EVP_DigestUpdate(ctx.get(), len.data(), len.size());
    EVP_DigestUpdate(ctx.get(), s.data(), s.size());
  };
  feed(kEngineVersion);
  for (auto p : parts) feed(p);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  return to_hex(digest, len);
}

ReportCache ReportCache::disabled() { return ReportCache(); }

ReportCache::ReportCache(fs::path dir) : dir_(std::move(dir)), enabled_(true) {}

std::optional<fs::path> ReportCache::default_dir() {
  if (const char* env = std::getenv(kCacheEnv); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return fs::path(xdg) / "cliffatlas";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "cliffatlas";
  }
  return std::nullopt;
}

fs::path ReportCache::path_for(const std::string& key) const {
  return dir_ / (key + std::string(kSuffix));
}

std::optional<json> ReportCache::load(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  try {
    return json::parse(in);
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

bool ReportCache::store(const std::string& key, const json& value) const {
  if (!enabled_) return false;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return false;
  const fs::path target = path_for(key);
  const fs::path tmp = dir_ / (key + ".tmp-" + unique_suffix());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << value.dump();
    if (!out.flush()) {
      fs::remove(tmp, ec);
      return false;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

std::pair<std::size_t, std::uintmax_t> ReportCache::stats() const {
  std::size_t count = 0;
  std::uintmax_t bytes = 0;
  std::error_code ec;
  if (!enabled_ || !fs::is_directory(dir_, ec)) return {0, 0};
  for (const auto& e : fs::directory_iterator(dir_, ec)) {
    if (e.is_regular_file() && e.path().extension() == kSuffix) {
      ++count;
      bytes += e.file_size();
    }
  }
  return {count, bytes};
}

std::size_t ReportCache::clear() const {
  std::size_t removed = 0;
  std::error_code ec;
  if (!enabled_ || !fs::is_directory(dir_, ec)) return 0;
  std::vector<fs::path> victims;
  for (const auto& e : fs::directory_iterator(dir_, ec)) {
    if (e.is_regular_file() && e.path().extension() == kSuffix) victims.push_back(e.path());
  }
  for (const auto& p : victims) {
    if (fs::remove(p, ec)) ++removed;
  }
  return removed;
}

}  // namespace cliffatlas::cli
