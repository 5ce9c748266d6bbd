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


// Renders the eight named abaci for s = 5, m = 3 and prints the partitions
// they encode.

#include <cstdint>
#include <iostream>
#include <string_view>

#include "coreabacus.hpp"

int main() {
  using namespace coreabacus;
  constexpr std::int64_t s = 5;
  constexpr std::int64_t m = 3;
  for (std::string_view name : construction_names()) {
    const Abacus a = build_named(name, s, m);
    const Partition p = beadset_to_partition(a.beads());
    std::cout << name << " (s=" << s << (a.runners() == s ? "" : ", m=3") << "): partition "
              << to_string(p) << ", weight " << p.weight() << ", " << p.length()
              << " parts\n"
              << render_abacus(a, s - 1) << '\n';
  }
  std::cout << "distinct-part (5,14)-cores: " << count_cores({5, 14}, {.distinct_parts = true})
            << " (recurrence gives " << straub_minus(m, s) << ")\n";
  return 0;
}
