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

/** @file enumeration.hpp
 *  @brief Exhaustive enumeration of simultaneous core partitions.
 *
 *  For coprime s and t, the minimal bead set of an (s,t)-core is a subset of
 *  the gaps of the numerical semigroup <s,t> that is closed under x -> x-s
 *  and x -> x-t, and every such down-closed subset is one. Enumerating the
 *  order ideals of the gap poset therefore lists every (s,t)-core exactly
 *  once. More moduli are handled by filtering a coprime pair's family.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coreabacus/abacus.hpp"
#include "coreabacus/errors.hpp"
#include "coreabacus/partition.hpp"

namespace coreabacus {

struct GapPoset {
  std::int64_t s = 1;
  std::int64_t t = 1;
  std::vector<std::int64_t> gaps;  // ascending
  std::map<std::int64_t, std::vector<std::int64_t>> covers;  // g -> {g-s, g-t} ∩ gaps
};

/// Gaps of <s,t> by sieving 0..st-s-t. Throws PreconditionError unless
/// s, t >= 1 and gcd(s, t) = 1.
inline GapPoset gap_poset(std::int64_t s, std::int64_t t) {
  if (s < 1 || t < 1) throw PreconditionError("moduli must be positive");
  if (std::gcd(s, t) != 1) {
    throw PreconditionError("moduli " + std::to_string(s) + " and " + std::to_string(t) +
                            " are not coprime");
  }
  GapPoset poset{s, t, {}, {}};
  const std::int64_t frobenius = s * t - s - t;
  if (frobenius < 1) return poset;
  std::vector<char> representable(static_cast<std::size_t>(frobenius + 1), 0);
  representable[0] = 1;
  for (std::int64_t x = 1; x <= frobenius; ++x) {
    representable[static_cast<std::size_t>(x)] =
        (x >= s && representable[static_cast<std::size_t>(x - s)]) ||
        (x >= t && representable[static_cast<std::size_t>(x - t)]);
  }
  for (std::int64_t x = 1; x <= frobenius; ++x) {
    if (representable[static_cast<std::size_t>(x)]) continue;
    poset.gaps.push_back(x);
    auto& below = poset.covers[x];
    for (std::int64_t step : {s, t}) {
      if (x - step > 0 && !representable[static_cast<std::size_t>(x - step)]) {
        below.push_back(x - step);
      }
    }
  }
  return poset;
}

/// binom(s+t, s) / (s+t), the number of (s,t)-cores, as a floating estimate
/// for planning and guard rails.
inline double st_core_count_estimate(std::int64_t s, std::int64_t t) {
  const double n = static_cast<double>(s + t);
  return std::exp(std::lgamma(n + 1) - std::lgamma(static_cast<double>(s) + 1) -
                  std::lgamma(static_cast<double>(t) + 1)) / n;
}

/// Calls `visit(const BeadSet&)` once per order ideal of the gap poset, i.e.
/// once per (s,t)-core, with the core's minimal bead set. Ideals are visited
/// by backtracking over the gaps in increasing order.
template <typename Visitor>
void for_each_st_core_beadset(const GapPoset& poset, Visitor&& visit) {
  const auto& gaps = poset.gaps;
  const std::int64_t top = gaps.empty() ? 0 : gaps.back();
  std::vector<char> chosen(static_cast<std::size_t>(top + 1), 0);
  std::vector<std::int64_t> current;
  current.reserve(gaps.size());

  auto admissible = [&](std::int64_t g) {
    for (std::int64_t lower : poset.covers.at(g)) {
      if (!chosen[static_cast<std::size_t>(lower)]) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t index) -> void {
    if (index == gaps.size()) {
      visit(BeadSet(current));
      return;
    }
    self(self, index + 1);
    const std::int64_t g = gaps[index];
    if (admissible(g)) {
      chosen[static_cast<std::size_t>(g)] = 1;
      current.push_back(g);
      self(self, index + 1);
      current.pop_back();
      chosen[static_cast<std::size_t>(g)] = 0;
    }
  };
  recurse(recurse, 0);
}

struct FamilyFilters {
  bool distinct_parts = false;
  bool self_conjugate = false;

  friend bool operator==(const FamilyFilters&, const FamilyFilters&) = default;
};

struct CoreFamily {
  std::vector<std::int64_t> moduli;
  FamilyFilters filters;
  std::vector<Partition> members;  // lexicographic part order, pairwise distinct

  std::size_t size() const { return members.size(); }

  std::int64_t max_weight() const {
    std::int64_t w = 0;
    for (const auto& p : members) w = std::max(w, p.weight());
    return w;
  }

  std::size_t longest_parts() const {
    std::size_t n = 0;
    for (const auto& p : members) n = std::max(n, p.length());
    return n;
  }
};

namespace detail {

inline void sort_members(std::vector<Partition>& members) {
  std::sort(members.begin(), members.end());
}

inline std::vector<std::int64_t> checked_moduli(std::span<const std::int64_t> moduli) {
  if (moduli.empty()) throw PreconditionError("need at least one core modulus");
  std::vector<std::int64_t> out(moduli.begin(), moduli.end());
  for (std::int64_t m : out) {
    if (m < 1) throw PreconditionError("core moduli must be positive");
  }
  return out;
}

inline bool passes(const BeadSet& x, const FamilyFilters& f) {
  if (f.distinct_parts && !beadset_has_distinct_parts(x)) return false;
  if (f.self_conjugate && !self_conjugate_axis_check(x)) return false;
  return true;
}

}  // namespace detail

inline CoreFamily enumerate_st_cores(std::int64_t s, std::int64_t t) {
  const GapPoset poset = gap_poset(s, t);
  CoreFamily family{{s, t}, {}, {}};
  for_each_st_core_beadset(poset, [&](const BeadSet& x) {
    family.members.push_back(beadset_to_partition(x));
  });
  detail::sort_members(family.members);
  return family;
}

/// The coprime pair in `moduli` with the fewest (s,t)-cores, if any.
inline std::optional<std::pair<std::int64_t, std::int64_t>> choose_coprime_pair(
    std::span<const std::int64_t> moduli) {
  std::optional<std::pair<std::int64_t, std::int64_t>> best;
  double best_count = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < moduli.size(); ++a) {
    for (std::size_t b = a + 1; b < moduli.size(); ++b) {
      if (std::gcd(moduli[a], moduli[b]) != 1) continue;
      const double count = st_core_count_estimate(moduli[a], moduli[b]);
      if (count < best_count) {
        best_count = count;
        best = std::minmax(moduli[a], moduli[b]);
      }
    }
  }
  if (!best && std::find(moduli.begin(), moduli.end(), 1) != moduli.end()) {
    best = std::pair<std::int64_t, std::int64_t>{1, 1};
  }
  return best;
}

/// Visits the minimal bead set of every simultaneous core for `moduli` that
/// passes `filters`. Throws PreconditionError when no coprime pair exists,
/// since the family may then be infinite.
template <typename Visitor>
void for_each_multi_core_beadset(std::span<const std::int64_t> moduli,
                                 const FamilyFilters& filters, Visitor&& visit) {
  const std::vector<std::int64_t> mods = detail::checked_moduli(moduli);
  const auto pair = choose_coprime_pair(mods);
  if (!pair) {
    throw PreconditionError("no coprime pair among the moduli; the family may be infinite");
  }
  const GapPoset poset = gap_poset(pair->first, pair->second);
  for_each_st_core_beadset(poset, [&](const BeadSet& x) {
    for (std::int64_t u : mods) {
      if (!is_core_abacus(to_abacus(x, u))) return;
    }
    if (detail::passes(x, filters)) visit(x);
  });
}

inline CoreFamily enumerate_multi_cores(std::span<const std::int64_t> moduli) {
  CoreFamily family{detail::checked_moduli(moduli), {}, {}};
  for_each_multi_core_beadset(moduli, {}, [&](const BeadSet& x) {
    family.members.push_back(beadset_to_partition(x));
  });
  detail::sort_members(family.members);
  return family;
}

inline CoreFamily enumerate_multi_cores(std::initializer_list<std::int64_t> moduli) {
  return enumerate_multi_cores(std::span<const std::int64_t>(moduli.begin(), moduli.size()));
}

/// Count-only fast path: filters run on bead sets, nothing is materialized.
inline std::int64_t count_cores(std::span<const std::int64_t> moduli,
                                const FamilyFilters& filters = {}) {
  std::int64_t n = 0;
  for_each_multi_core_beadset(moduli, filters, [&](const BeadSet&) { ++n; });
  return n;
}

inline std::int64_t count_cores(std::initializer_list<std::int64_t> moduli,
                                const FamilyFilters& filters = {}) {
  return count_cores(std::span<const std::int64_t>(moduli.begin(), moduli.size()), filters);
}

inline CoreFamily filter_distinct(CoreFamily f) {
  std::erase_if(f.members, [](const Partition& p) { return !has_distinct_parts(p); });
  f.filters.distinct_parts = true;
  return f;
}

inline CoreFamily filter_self_conjugate(CoreFamily f) {
  std::erase_if(f.members, [](const Partition& p) { return !is_self_conjugate(p); });
  f.filters.self_conjugate = true;
  return f;
}

inline CoreFamily apply_filters(CoreFamily f, const FamilyFilters& filters) {
  if (filters.distinct_parts) f = filter_distinct(std::move(f));
  if (filters.self_conjugate) f = filter_self_conjugate(std::move(f));
  return f;
}

/// The member with the most parts. Throws AmbiguityError listing every tied
/// member if that maximum is shared.
inline Partition longest_member(const CoreFamily& f) {
  if (f.members.empty()) throw PreconditionError("family is empty");
  const std::size_t most = f.longest_parts();
  std::vector<std::string> tied;
  const Partition* winner = nullptr;
  for (const auto& p : f.members) {
    if (p.length() != most) continue;
    winner = &p;
    tied.push_back(to_string(p));
  }
  if (tied.size() > 1) {
    throw AmbiguityError("longest member is not unique (" + std::to_string(tied.size()) +
                             " members with " + std::to_string(most) + " parts)",
                         std::move(tied));
  }
  return *winner;
}

/// Every member of maximal weight, in family order.
inline std::vector<Partition> maximal_members(const CoreFamily& f) {
  const std::int64_t w = f.max_weight();
  std::vector<Partition> out;
  for (const auto& p : f.members) {
    if (p.weight() == w) out.push_back(p);
  }
  return out;
}

}  // namespace coreabacus
