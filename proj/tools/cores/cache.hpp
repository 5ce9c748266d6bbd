// Copyright 2026 The coreabacus Authors
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


// On-disk JSON result cache for the command-line tool. Entries are keyed by a
// canonical command string, written atomically, and ignored when they were
// produced by a different tool version.

#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>

#include <unistd.h>

#include "json.hpp"

#include "coreabacus/version.hpp"

namespace cores {

inline std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class ResultCache {
 public:
  /// COREABACUS_CACHE, else $XDG_DATA_HOME/coreabacus, else
  /// ~/.local/share/coreabacus.
  static std::optional<std::filesystem::path> default_dir() {
    if (const char* dir = std::getenv("COREABACUS_CACHE"); dir != nullptr && *dir != '\0') {
      return std::filesystem::path(dir);
    }
    if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg != nullptr && *xdg != '\0') {
      return std::filesystem::path(xdg) / "coreabacus";
    }
    if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
      return std::filesystem::path(home) / ".local" / "share" / "coreabacus";
    }
    return std::nullopt;
  }

  explicit ResultCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

  bool enabled() const { return dir_.has_value(); }

  std::filesystem::path entry_path(const std::string& key) const {
    std::ostringstream name;
    name << std::hex << fnv1a(key) << ".json";
    return *dir_ / name.str();
  }

  /// The cached payload for `key`, if present, intact and version-matched.
  std::optional<nlohmann::json> get(const std::string& key) const {
    if (!dir_) return std::nullopt;
    std::ifstream in(entry_path(key));
    if (!in) return std::nullopt;
    const nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
    if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
    if (entry.value("key", "") != key) return std::nullopt;
    if (entry.value("tool_version", "") != coreabacus::kToolVersion) return std::nullopt;
    if (!entry.contains("payload")) return std::nullopt;
    return entry.at("payload");
  }

  /// Best effort: failures to write leave the cache untouched.
  void put(const std::string& key, const nlohmann::json& payload) const {
    if (!dir_) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    if (ec) return;
    static std::atomic<std::uint64_t> counter{0};
    const std::filesystem::path target = entry_path(key);
    std::filesystem::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) return;
      const nlohmann::json entry = {{"key", key},
                                    {"payload", payload},
                                    {"created_at", utc_timestamp()},
                                    {"tool_version", coreabacus::kToolVersion}};
      out << entry.dump() << '\n';
      if (!out) {
        out.close();
        std::filesystem::remove(tmp, ec);
        return;
      }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

 private:
  std::optional<std::filesystem::path> dir_;
};

}  // namespace cores
