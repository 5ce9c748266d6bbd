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

// Brute-force reference enumeration. Nothing in here touches bead sets or
// abaci: partitions are generated directly and cores are detected from the
// Young-diagram hook multiset, so results can be diffed against the
// gap-poset enumerator.

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "coreabacus/enumeration.hpp"
#include "coreabacus/errors.hpp"
#include "coreabacus/partition.hpp"

namespace coreabacus::oracle {

inline constexpr std::int64_t kMaxOracleWeight = 40;

/// Every partition of n, parts in decreasing order.
template <typename Visitor>
void for_each_partition(std::int64_t n, Visitor&& visit) {
  std::vector<std::int64_t> parts;
  auto recurse = [&](auto&& self, std::int64_t remaining, std::int64_t cap) -> void {
    if (remaining == 0) {
      visit(Partition(parts));
      return;
    }
    for (std::int64_t p = std::min(remaining, cap); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  recurse(recurse, n, n);
}

inline std::vector<Partition> partitions_up_to(std::int64_t max_weight) {
  std::vector<Partition> out;
  for (std::int64_t n = 0; n <= max_weight; ++n) {
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  }
  return out;
}

inline bool has_hook_of_length(const Partition& p, std::int64_t t) {
  const auto hooks = hook_lengths(p);
  return std::any_of(hooks.begin(), hooks.end(),
                     [t](const HookLength& h) { return h.length == t; });
}

/// Simultaneous cores of weight <= max_weight, by hook multiset.
inline CoreFamily oracle_enumerate(std::span<const std::int64_t> moduli,
                                   std::int64_t max_weight) {
  if (max_weight > kMaxOracleWeight) {
    throw GuardRailError("oracle weight bound exceeded",
                         "max_weight <= " + std::to_string(kMaxOracleWeight));
  }
  if (moduli.empty()) throw PreconditionError("need at least one core modulus");
  CoreFamily family{{moduli.begin(), moduli.end()}, {}, {}};
  for (std::int64_t n = 0; n <= max_weight; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      for (std::int64_t t : moduli) {
        if (has_hook_of_length(p, t)) return;
      }
      family.members.push_back(p);
    });
  }
  std::sort(family.members.begin(), family.members.end());
  return family;
}

inline CoreFamily oracle_enumerate(std::initializer_list<std::int64_t> moduli,
                                   std::int64_t max_weight) {
  return oracle_enumerate(std::span<const std::int64_t>(moduli.begin(), moduli.size()),
                          max_weight);
}

}  // namespace coreabacus::oracle
