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

/** @file verification.hpp
 *  @brief Cell-by-cell comparison of closed forms against enumeration.
 *
 *  A claim is checked over a parameter grid. Each grid point yields one or
 *  more cells holding an expected and an observed JSON value. A cell passes
 *  exactly when the two are equal, and every quantity involved is an integer
 *  or a list of partitions, so there is no tolerance anywhere.
 *
 *  Claim ids: xiong, straub-minus, straub-plus, middle, olsson-stanton,
 *  sylvester, emax, longest-m2, row-structure, two-conj, fstar,
 *  e-minus-star, e-plus-star, berger.
 *
 *  The berger claim tests a conjecture, so its cells also carry a status of
 *  SUPPORTED, REFUTED-AT(s,m) or UNTESTED instead of being asserted.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "coreabacus/abacus.hpp"
#include "coreabacus/constructions.hpp"
#include "coreabacus/enumeration.hpp"
#include "coreabacus/errors.hpp"
#include "coreabacus/formulas.hpp"
#include "coreabacus/guard_rails.hpp"
#include "coreabacus/io.hpp"
#include "coreabacus/oracle.hpp"
#include "coreabacus/partition.hpp"

namespace coreabacus {

struct VerificationCell {
  nlohmann::json params;
  nlohmann::json expected;
  nlohmann::json observed;
  bool pass = false;
  nlohmann::json extra = nlohmann::json::object();  // merged into the cell's JSON
};

struct VerificationReport {
  std::string claim;
  Grid grid;
  std::vector<VerificationCell> cells;
  std::int64_t elapsed_ms = 0;

  bool all_pass() const {
    return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.pass; });
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const auto& c) { return !c.pass; }));
  }

  /// {claim, grid, cells: [{params, expected, observed, pass, ...}], elapsed_ms}
  nlohmann::json to_json() const {
    nlohmann::json g = nlohmann::json::object();
    for (const auto& [axis, r] : grid) g[axis] = {r.lo, r.hi};
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : cells) {
      nlohmann::json cell = {{"params", c.params},
                             {"expected", c.expected},
                             {"observed", c.observed},
                             {"pass", c.pass}};
      for (const auto& [k, v] : c.extra.items()) cell[k] = v;
      cs.push_back(std::move(cell));
    }
    return {{"claim", claim}, {"grid", g}, {"cells", cs}, {"elapsed_ms", elapsed_ms}};
  }
};

using Params = std::map<std::string, std::int64_t>;

struct ClaimDef {
  std::string id;
  std::vector<std::string> axes;   // outermost first
  std::vector<std::int64_t> axis_min;
  std::string summary;
  std::function<std::vector<VerificationCell>(const Params&, const GuardRails&)> evaluate;
};

namespace detail {

inline nlohmann::json params_json(const Params& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

inline VerificationCell make_cell(const Params& p, nlohmann::json expected,
                                  nlohmann::json observed, const char* check = nullptr) {
  VerificationCell c;
  c.params = params_json(p);
  if (check != nullptr) c.params["check"] = check;
  c.pass = expected == observed;
  c.expected = std::move(expected);
  c.observed = std::move(observed);
  return c;
}

inline void require_family_budget(std::int64_t s, std::int64_t t, const GuardRails& rails) {
  if (st_core_count_estimate(s, t) > static_cast<double>(rails.max_family_size)) {
    throw GuardRailError("(" + std::to_string(s) + "," + std::to_string(t) +
                             ")-core family exceeds max_family_size",
                         "smaller s or m");
  }
}

inline std::int64_t distinct_count(std::int64_t s, std::int64_t t, const GuardRails& rails) {
  require_family_budget(s, t, rails);
  return count_cores({s, t}, {.distinct_parts = true});
}

inline std::int64_t self_conjugate_distinct_count(std::int64_t s, std::int64_t t,
                                                  const GuardRails& rails) {
  require_family_budget(s, t, rails);
  return count_cores({s, t}, {.distinct_parts = true, .self_conjugate = true});
}

inline Partition partition_of(const Abacus& a) { return beadset_to_partition(a.beads()); }

// --- per-claim evaluators -------------------------------------------------

inline std::vector<VerificationCell> eval_xiong(const Params& p, const GuardRails& rails) {
  const std::int64_t s = p.at("s");
  return {make_cell(p, fib_count(s), distinct_count(s, s + 1, rails))};
}

inline std::vector<VerificationCell> eval_straub(const Params& p, const GuardRails& rails,
                                                 int sign) {
  const std::int64_t s = p.at("s");
  const std::int64_t m = p.at("m");
  const std::int64_t t = m * s + sign;
  if (t < 1) return {};
  const std::int64_t expected = sign < 0 ? straub_minus(m, s) : straub_plus(m, s);
  return {make_cell(p, expected, distinct_count(s, t, rails))};
}

inline std::vector<VerificationCell> eval_middle(const Params& p, const GuardRails& rails) {
  const std::int64_t s = p.at("s");
  const std::int64_t m = p.at("m");
  if (s < 3) return {};
  std::vector<VerificationCell> cells;
  cells.push_back(make_cell(p, straub_minus(m, s),
                            add(straub_plus(m, s - 1), mul(m - 1, straub_plus(m, s - 2))),
                            "recurrence"));
  if (st_core_count_estimate(s, m * s + 1) <= static_cast<double>(rails.max_family_size)) {
    const std::int64_t lhs = distinct_count(s, m * s - 1, rails);
    const std::int64_t rhs = distinct_count(s - 1, m * (s - 1) + 1, rails) +
                             (m - 1) * distinct_count(s - 2, m * (s - 2) + 1, rails);
    cells.push_back(make_cell(p, lhs, rhs, "enumerated"));
  }
  return cells;
}

inline std::vector<VerificationCell> eval_olsson_stanton(const Params& p,
                                                         const GuardRails& rails) {
  const std::int64_t s = p.at("s");
  const std::int64_t t = p.at("t");
  if (s >= t || std::gcd(s, t) != 1) return {};
  require_family_budget(s, t, rails);
  std::int64_t best = -1;
  std::int64_t attained = 0;
  for_each_st_core_beadset(gap_poset(s, t), [&](const BeadSet& x) {
    const std::int64_t w = beadset_weight(x);
    if (w > best) {
      best = w;
      attained = 0;
    }
    if (w == best) ++attained;
  });
  return {make_cell(p, {{"max_weight", max_weight_formula(s, t)}, {"attained_by", 1}},
                    {{"max_weight", best}, {"attained_by", attained}})};
}

inline std::vector<VerificationCell> eval_sylvester(const Params& p, const GuardRails& rails) {
  const std::int64_t s = p.at("s");
  const std::int64_t t = p.at("t");
  if (s < 2 || s >= t || std::gcd(s, t) != 1) return {};
  require_family_budget(s, t, rails);
  const GapPoset poset = gap_poset(s, t);
  const std::int64_t big = s * t - s - t;
  std::int64_t holders = 0;
  std::int64_t holder_weight = -1;
  std::int64_t max_weight = -1;
  for_each_st_core_beadset(poset, [&](const BeadSet& x) {
    const Partition q = beadset_to_partition(x);
    max_weight = std::max(max_weight, q.weight());
    if (oracle::has_hook_of_length(q, big)) {
      ++holders;
      holder_weight = q.weight();
    }
  });
  return {make_cell(p,
                    {{"frobenius", big},
                     {"gap_count", (s - 1) * (t - 1) / 2},
                     {"bighook_cores", 1},
                     {"bighook_is_maximal", true}},
                    {{"frobenius", poset.gaps.empty() ? -1 : poset.gaps.back()},
                     {"gap_count", poset.gaps.size()},
                     {"bighook_cores", holders},
                     {"bighook_is_maximal", holders == 1 && holder_weight == max_weight}})};
}

inline std::vector<VerificationCell> eval_emax(const Params& p, const GuardRails& rails) {
  const std::int64_t s = p.at("s");
  const std::int64_t m = p.at("m");
  std::vector<VerificationCell> cells;
  for (int sign : {-1, 1}) {
    const std::int64_t t = m * s + sign;
    if (t < 1) continue;
    require_family_budget(s, t, rails);
    const Abacus built = sign < 0 ? build_E_minus(s, m) : build_E_plus(s, m);
    const Abacus coords = sign < 0 ? coordinates::E_minus(s, m) : coordinates::E_plus(s, m);
    const Partition q = partition_of(built);
    const CoreFamily family = enumerate_st_cores(s, t);
    const auto maxes = maximal_members(family);
    const std::int64_t big = s * t - s - t;
    cells.push_back(make_cell(
        p,
        {{"weight", max_weight_formula(s, t)},
         {"core", true},
         {"unique_maximal", true},
         {"bighook", big > 0},
         {"matches_coordinates", true}},
        {{"weight", q.weight()},
         {"core", is_simultaneous_core(q, {s, t})},
         {"unique_maximal", maxes.size() == 1 && maxes.front() == q},
         {"bighook", big > 0 && oracle::has_hook_of_length(q, big)},
         {"matches_coordinates", built == coords}},
        sign < 0 ? "minus" : "plus"));
  }
  return cells;
}

inline std::vector<VerificationCell> eval_longest(const Params& p, const GuardRails& rails) {
  const std::int64_t s = p.at("s");
  const std::int64_t m = p.at("m");
  const Abacus L = build_L(s, m);
  const Partition q = partition_of(L);
  std::vector<VerificationCell> cells;
  cells.push_back(make_cell(p, longest_weight_formula(s, m), q.weight(), "formula"));
  cells.push_back(make_cell(p, intersect(build_E_minus(s, m), build_E_plus(s, m)).beads(),
                            L.beads(), "intersection"));
  if (m * s - 1 >= 1) {
    require_family_budget(s, m * s + 1, rails);
    const CoreFamily family = enumerate_multi_cores({s, m * s - 1, m * s + 1});
    std::size_t at_max = 0;
    for (const auto& member : family.members) at_max += member.length() == family.longest_parts();
    const Partition* longest = nullptr;
    for (const auto& member : family.members) {
      if (member.length() == family.longest_parts()) longest = &member;
    }
    cells.push_back(make_cell(
        p, {{"parts", q.length()}, {"unique", true}, {"partition", q}},
        {{"parts", family.longest_parts()}, {"unique", at_max == 1}, {"partition", *longest}},
        "brute-force"));
  }
  return cells;
}

inline std::vector<VerificationCell> eval_row(const Params& p, const GuardRails& rails) {
  const std::int64_t s = p.at("s");
  const std::int64_t m = p.at("m");
  std::vector<VerificationCell> cells;
  for (int sign : {-1, 1}) {
    const std::int64_t t = m * s + sign;
    if (t < 1) continue;
    require_family_budget(s, t, rails);
    const Abacus bound = sign < 0 ? build_E_minus(s, m) : build_E_plus(s, m);
    std::int64_t checked = 0;
    std::int64_t violations = 0;
    for_each_multi_core_beadset(std::vector<std::int64_t>{s, t}, {.distinct_parts = true},
                                [&](const BeadSet& x) {
                                  ++checked;
                                  const Abacus a = to_abacus(x, m * s);
                                  if (a.height() > 1 || !is_sub_abacus(a, bound)) ++violations;
                                });
    VerificationCell c = make_cell(p, {{"violations", 0}}, {{"violations", violations}},
                                   sign < 0 ? "minus" : "plus");
    c.extra["checked"] = checked;
    cells.push_back(std::move(c));
  }
  return cells;
}

inline std::vector<VerificationCell> eval_two_conj(const Params& p, const GuardRails&) {
  const std::int64_t n = p.at("n");
  if (n > oracle::kMaxOracleWeight) {
    throw GuardRailError("two-conj weight too large", "n <= 40");
  }
  std::vector<Partition> staircases;
  std::vector<Partition> symmetric_distinct;
  oracle::for_each_partition(n, [&](const Partition& q) {
    if (is_two_core(q)) staircases.push_back(q);
    if (is_self_conjugate(q) && has_distinct_parts(q)) symmetric_distinct.push_back(q);
  });
  return {make_cell(p, staircases, symmetric_distinct)};
}

inline std::vector<VerificationCell> eval_fstar(const Params& p, const GuardRails& rails) {
  const std::int64_t s = p.at("s");
  return {make_cell(p, self_conjugate_counts(SelfConjugateKind::kPlain, 1, s),
                    self_conjugate_distinct_count(s, s + 1, rails))};
}

inline std::vector<VerificationCell> eval_star(const Params& p, const GuardRails& rails,
                                               int sign) {
  const std::int64_t s = p.at("s");
  const std::int64_t m = p.at("m");
  const std::int64_t t = m * s + sign;
  if (t < 1) return {};
  const auto kind = sign < 0 ? SelfConjugateKind::kMinus : SelfConjugateKind::kPlus;
  std::vector<VerificationCell> cells;
  const std::int64_t observed = self_conjugate_distinct_count(s, t, rails);
  cells.push_back(make_cell(p, self_conjugate_counts(kind, m, s), observed, "formula"));
  if (sign < 0 && s % 2 == 1) {
    cells.push_back(make_cell(p, observed, self_conjugate_distinct_count(s, m * s + 1, rails),
                              "odd-equality"));
  }
  return cells;
}

inline std::vector<VerificationCell> eval_berger(const Params& p, const GuardRails& rails) {
  const std::int64_t s = p.at("s");
  const std::int64_t m = p.at("m");
  if (m * s - 1 < 1) {
    VerificationCell c = make_cell(p, nullptr, nullptr);
    c.extra["status"] = "UNTESTED";
    return {c};
  }
  require_family_budget(s, m * s + 1, rails);
  const CoreFamily family = enumerate_multi_cores({s, m * s - 1, m * s + 1});
  const Partition longest = partition_of(build_L(s, m));
  std::vector<Partition> predicted{longest, conjugate(longest)};
  std::sort(predicted.begin(), predicted.end());
  predicted.erase(std::unique(predicted.begin(), predicted.end()), predicted.end());
  VerificationCell c = make_cell(
      p, {{"max_weight", longest_weight_formula(s, m)}, {"maximal", predicted}},
      {{"max_weight", family.max_weight()}, {"maximal", maximal_members(family)}});
  c.extra["status"] =
      c.pass ? "SUPPORTED" : "REFUTED-AT(" + std::to_string(s) + "," + std::to_string(m) + ")";
  if (s % 2 == 0) c.extra["m_squared_divides"] = family.max_weight() % (m * m) == 0;
  return {c};
}

}  // namespace detail

inline const std::vector<ClaimDef>& claim_registry() {
  using namespace detail;
  static const std::vector<ClaimDef> registry{
      {"xiong", {"s"}, {1}, "distinct-part (s,s+1)-cores = F_{s+1}", eval_xiong},
      {"straub-minus", {"s", "m"}, {1, 1}, "distinct-part (s,ms-1)-cores = E-_m(s)",
       [](const Params& p, const GuardRails& r) { return eval_straub(p, r, -1); }},
      {"straub-plus", {"s", "m"}, {1, 1}, "distinct-part (s,ms+1)-cores = E+_m(s)",
       [](const Params& p, const GuardRails& r) { return eval_straub(p, r, 1); }},
      {"middle", {"s", "m"}, {1, 1}, "E-_m(s) = E+_m(s-1) + (m-1) E+_m(s-2)", eval_middle},
      {"olsson-stanton", {"s", "t"}, {1, 1}, "unique maximal (s,t)-core of weight (s^2-1)(t^2-1)/24",
       eval_olsson_stanton},
      {"sylvester", {"s", "t"}, {1, 1}, "largest hook st-s-t, held only by the maximal core",
       eval_sylvester},
      {"emax", {"s", "m"}, {1, 1}, "E-/E+ abaci give the maximal (s,ms-+1)-cores", eval_emax},
      {"longest-m2", {"s", "m"}, {1, 1}, "weight and uniqueness of the longest (s,ms-1,ms+1)-core",
       eval_longest},
      {"row-structure", {"s", "m"}, {1, 1}, "distinct-part cores live in row 0 of E-/E+",
       eval_row},
      {"two-conj", {"n"}, {0}, "self-conjugate with distinct parts <=> staircase", eval_two_conj},
      {"fstar", {"s"}, {1}, "self-conjugate distinct-part (s,s+1)-cores", eval_fstar},
      {"e-minus-star", {"s", "m"}, {1, 1}, "self-conjugate distinct-part (s,ms-1)-cores",
       [](const Params& p, const GuardRails& r) { return eval_star(p, r, -1); }},
      {"e-plus-star", {"s", "m"}, {1, 1}, "self-conjugate distinct-part (s,ms+1)-cores",
       [](const Params& p, const GuardRails& r) { return eval_star(p, r, 1); }},
      {"berger", {"s", "m"}, {1, 1}, "maximal (s,ms-1,ms+1)-cores vs the longest-core weight",
       eval_berger},
  };
  return registry;
}

inline const ClaimDef& find_claim(const std::string& id) {
  for (const auto& c : claim_registry()) {
    if (c.id == id) return c;
  }
  std::string known;
  for (const auto& c : claim_registry()) known += (known.empty() ? "" : ", ") + c.id;
  throw PreconditionError("unknown claim '" + id + "' (known: " + known + ")");
}

/// Defaults from the rails, overlaid with `requested`. Throws
/// PreconditionError for unknown axes or values below an axis minimum and
/// GuardRailError (with a clamped suggestion) above the published limit.
inline Grid resolve_grid(const ClaimDef& claim, const std::optional<Grid>& requested,
                         const GuardRails& rails) {
  const ClaimRails& cr = rails.for_claim(claim.id);
  Grid grid = cr.defaults;
  if (requested) {
    for (const auto& [axis, r] : *requested) {
      if (std::find(claim.axes.begin(), claim.axes.end(), axis) == claim.axes.end()) {
        throw PreconditionError("claim '" + claim.id + "' has no axis '" + axis + "'");
      }
      grid[axis] = r;
    }
  }
  Grid clamped = grid;
  bool breach = false;
  for (std::size_t k = 0; k < claim.axes.size(); ++k) {
    const std::string& axis = claim.axes[k];
    if (!grid.contains(axis)) throw InvariantError("no default range for axis " + axis);
    AxisRange& r = clamped[axis];
    if (r.lo < claim.axis_min[k]) {
      throw PreconditionError("axis '" + axis + "' must start at " +
                              std::to_string(claim.axis_min[k]) + " or above");
    }
    const std::int64_t limit = cr.max.at(axis);
    if (r.hi > limit) {
      breach = true;
      r.hi = limit;
      r.lo = std::min(r.lo, limit);
    }
  }
  if (breach) {
    throw GuardRailError("grid " + grid_to_string(grid) + " exceeds the desk-scale rails for '" +
                             claim.id + "'",
                         grid_to_string(clamped));
  }
  return grid;
}

/// Runs every grid cell of `claim_id`, fanning out over `workers` threads
/// (0 = hardware concurrency). Cells come back in grid order regardless.
inline VerificationReport verify_claim(const std::string& claim_id,
                                       const std::optional<Grid>& requested = std::nullopt,
                                       const GuardRails& rails = GuardRails::builtin(),
                                       unsigned workers = 0) {
  const auto start = std::chrono::steady_clock::now();
  const ClaimDef& claim = find_claim(claim_id);
  VerificationReport report;
  report.claim = claim.id;
  report.grid = resolve_grid(claim, requested, rails);

  std::vector<Params> points{{}};
  for (const auto& axis : claim.axes) {
    std::vector<Params> next;
    const AxisRange r = report.grid.at(axis);
    for (const auto& base : points) {
      for (std::int64_t v = r.lo; v <= r.hi; ++v) {
        Params q = base;
        q[axis] = v;
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }

  std::vector<std::vector<VerificationCell>> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t k = cursor++; k < points.size(); k = cursor++) {
      try {
        results[k] = claim.evaluate(points[k], rails);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, points.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& cells : results) {
    for (auto& c : cells) report.cells.push_back(std::move(c));
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

/// Whether m^2 divides the brute-forced maximal (s, ms-1, ms+1)-core weight.
/// Defined for even s only.
inline bool divisibility_check(std::int64_t s, std::int64_t m) {
  if (s < 2 || s % 2 != 0) throw PreconditionError("divisibility check needs even s >= 2");
  if (m < 1) throw PreconditionError("m must be at least 1");
  const CoreFamily family = enumerate_multi_cores({s, m * s - 1, m * s + 1});
  return family.max_weight() % (m * m) == 0;
}

}  // namespace coreabacus
