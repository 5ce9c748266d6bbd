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

// Desk-scale limits and default parameter grids for the verification claims.
// The built-in copy is generated from config/guard_rails.json at configure
// time; a different file can be loaded for deeper runs.

#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "coreabacus/errors.hpp"
#include "coreabacus/guard_rails_config.hpp"

namespace coreabacus {

struct AxisRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const AxisRange&, const AxisRange&) = default;
};

/// Axis name -> inclusive range, iterated in axis-name order.
using Grid = std::map<std::string, AxisRange>;

struct ClaimRails {
  Grid defaults;
  std::map<std::string, std::int64_t> max;
};

struct GuardRails {
  std::string version;
  std::int64_t max_family_size = 0;
  std::map<std::string, ClaimRails> claims;

  static GuardRails parse(const nlohmann::json& j) {
    GuardRails rails;
    rails.version = j.at("version").get<std::string>();
    rails.max_family_size = j.at("max_family_size").get<std::int64_t>();
    for (const auto& [claim, body] : j.at("claims").items()) {
      ClaimRails cr;
      for (const auto& [axis, range] : body.at("default").items()) {
        cr.defaults[axis] = {range.at(0).get<std::int64_t>(), range.at(1).get<std::int64_t>()};
      }
      for (const auto& [axis, limit] : body.at("max").items()) {
        cr.max[axis] = limit.get<std::int64_t>();
      }
      rails.claims.emplace(claim, std::move(cr));
    }
    return rails;
  }

  static const GuardRails& builtin() {
    static const GuardRails rails = parse(nlohmann::json::parse(kBuiltinGuardRailsJson));
    return rails;
  }

  static GuardRails load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open guard-rail file " + path);
    try {
      return parse(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw PreconditionError("malformed guard-rail file " + path + ": " + e.what());
    }
  }

  const ClaimRails& for_claim(const std::string& claim) const {
    auto it = claims.find(claim);
    if (it == claims.end()) throw PreconditionError("no guard rails for claim '" + claim + "'");
    return it->second;
  }
};

/// "m=1..3,s=1..10"; single-valued axes render as "s=5".
inline std::string grid_to_string(const Grid& grid) {
  std::string out;
  for (const auto& [axis, r] : grid) {
    if (!out.empty()) out += ",";
    out += axis + "=" + std::to_string(r.lo);
    if (r.hi != r.lo) out += ".." + std::to_string(r.hi);
  }
  return out;
}

/// Parses "s=1..10,m=1..3" (or "s=5"). Throws PreconditionError on syntax.
inline Grid parse_grid(std::string_view text) {
  Grid grid;
  auto number = [&](std::string_view v) {
    std::int64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
      throw PreconditionError("bad number '" + std::string(v) + "' in grid");
    }
    return out;
  };
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw PreconditionError("grid item '" + std::string(item) + "' is not axis=lo..hi");
    }
    const std::string axis(item.substr(0, eq));
    const std::string_view range = item.substr(eq + 1);
    const auto dots = range.find("..");
    AxisRange r;
    if (dots == std::string_view::npos) {
      r.lo = r.hi = number(range);
    } else {
      r.lo = number(range.substr(0, dots));
      r.hi = number(range.substr(dots + 2));
    }
    if (r.lo > r.hi) throw PreconditionError("empty range for axis '" + axis + "'");
    if (!grid.emplace(axis, r).second) {
      throw PreconditionError("axis '" + axis + "' given twice");
    }
  }
  return grid;
}

}  // namespace coreabacus
