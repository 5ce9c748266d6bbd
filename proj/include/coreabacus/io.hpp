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

// JSON forms: a partition is an array of parts, largest first ([] when
// empty); a bead set is an ascending array of bead positions.

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "json.hpp"

#include "coreabacus/abacus.hpp"
#include "coreabacus/enumeration.hpp"
#include "coreabacus/errors.hpp"
#include "coreabacus/partition.hpp"

namespace coreabacus {

inline void to_json(nlohmann::json& j, const Partition& p) {
  j = nlohmann::json::array();
  for (std::int64_t part : p.parts()) j.push_back(part);
}

inline void from_json(const nlohmann::json& j, Partition& p) {
  if (!j.is_array()) throw PreconditionError("partition JSON must be an array");
  p = Partition(j.get<std::vector<std::int64_t>>());
}

inline void to_json(nlohmann::json& j, const BeadSet& x) {
  j = nlohmann::json::array();
  for (std::int64_t b : x.beads()) j.push_back(b);
}

inline void from_json(const nlohmann::json& j, BeadSet& x) {
  if (!j.is_array()) throw PreconditionError("bead set JSON must be an array");
  const auto beads = j.get<std::vector<std::int64_t>>();
  if (!std::is_sorted(beads.begin(), beads.end()) ||
      std::adjacent_find(beads.begin(), beads.end()) != beads.end()) {
    throw PreconditionError("bead set JSON must be strictly ascending");
  }
  x = BeadSet(beads);
}

/// {"metadata": {moduli, filters, count, max_weight, longest_parts},
///  "partitions": [[...], ...]}
inline nlohmann::json family_to_json(const CoreFamily& f) {
  nlohmann::json filters = nlohmann::json::array();
  if (f.filters.distinct_parts) filters.push_back("distinct");
  if (f.filters.self_conjugate) filters.push_back("self-conjugate");
  nlohmann::json out;
  out["metadata"] = {{"moduli", f.moduli},
                     {"filters", filters},
                     {"count", f.members.size()},
                     {"max_weight", f.max_weight()},
                     {"longest_parts", f.longest_parts()}};
  out["partitions"] = f.members;
  return out;
}

inline CoreFamily family_from_json(const nlohmann::json& j) {
  CoreFamily f;
  const auto& meta = j.at("metadata");
  f.moduli = meta.at("moduli").get<std::vector<std::int64_t>>();
  for (const auto& name : meta.at("filters")) {
    if (name == "distinct") f.filters.distinct_parts = true;
    else if (name == "self-conjugate") f.filters.self_conjugate = true;
    else throw PreconditionError("unknown filter in family JSON");
  }
  f.members = j.at("partitions").get<std::vector<Partition>>();
  if (meta.at("count").get<std::size_t>() != f.members.size()) {
    throw PreconditionError("family JSON count does not match its partitions");
  }
  return f;
}

}  // namespace coreabacus
