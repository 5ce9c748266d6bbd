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


// Acceptance checks. `acceptance --criterion N` runs one criterion; with no
// arguments all nine run. Each prints one PASS/FAIL line and the exit code is
// non-zero if any selected criterion fails.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coreabacus.hpp"
#include "support/oracles.hpp"

namespace {

using namespace coreabacus;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail.clear();
  if (!o.detail.empty()) o.detail += "; ";
  o.pass = false;
  o.detail += why;
}

std::string list(const std::vector<Partition>& ps) {
  std::string out = "{";
  for (std::size_t k = 0; k < ps.size(); ++k) out += (k ? "," : "") + to_string(ps[k]);
  return out + "}";
}

Partition partition_of(const Abacus& a) { return beadset_to_partition(a.beads()); }

Outcome maximal_st_cores() {
  Outcome o;
  int pairs = 0;
  for (std::int64_t t = 2; t <= 12; ++t) {
    for (std::int64_t s = 1; s < t; ++s) {
      if (std::gcd(s, t) != 1) continue;
      ++pairs;
      std::int64_t best = -1;
      std::int64_t hits = 0;
      for_each_st_core_beadset(gap_poset(s, t), [&](const BeadSet& x) {
        const std::int64_t w = beadset_weight(x);
        if (w > best) {
          best = w;
          hits = 0;
        }
        hits += w == best;
      });
      if (best != max_weight_formula(s, t) || hits != 1) {
        fail(o, "(" + std::to_string(s) + "," + std::to_string(t) + "): max " +
                    std::to_string(best) + " x" + std::to_string(hits) + ", formula " +
                    std::to_string(max_weight_formula(s, t)));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " coprime pairs, unique maximum at formula weight";
  return o;
}

Outcome distinct_consecutive() {
  Outcome o;
  std::string seq;
  for (std::int64_t s = 1; s <= 10; ++s) {
    const std::int64_t n = count_cores({s, s + 1}, {.distinct_parts = true});
    seq += (s > 1 ? "," : "") + std::to_string(n);
    if (n != fib_count(s)) fail(o, "s=" + std::to_string(s) + ": " + std::to_string(n));
  }
  if (o.pass) o.detail = "counts " + seq;
  return o;
}

Outcome distinct_ms_pm_one() {
  Outcome o;
  int cells = 0;
  for (std::int64_t s = 1; s <= 6; ++s) {
    for (std::int64_t m = 1; m <= 3; ++m) {
      if (m * s - 1 >= 1) {
        ++cells;
        const std::int64_t n = count_cores({s, m * s - 1}, {.distinct_parts = true});
        if (n != straub_minus(m, s)) fail(o, "minus s=" + std::to_string(s) + " m=" + std::to_string(m));
      }
      ++cells;
      const std::int64_t p = count_cores({s, m * s + 1}, {.distinct_parts = true});
      if (p != straub_plus(m, s)) fail(o, "plus s=" + std::to_string(s) + " m=" + std::to_string(m));
      if (s >= 3) {
        ++cells;
        const std::int64_t lhs = count_cores({s, m * s - 1}, {.distinct_parts = true});
        const std::int64_t rhs =
            count_cores({s - 1, m * (s - 1) + 1}, {.distinct_parts = true}) +
            (m - 1) * count_cores({s - 2, m * (s - 2) + 1}, {.distinct_parts = true});
        if (lhs != rhs || !middle_identity_check(m, s)) {
          fail(o, "middle s=" + std::to_string(s) + " m=" + std::to_string(m));
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cells) + " cells exact";
  return o;
}

Outcome golden_renderings() {
  Outcome o;
  struct Case {
    const char* name;
    const char* file;
    std::vector<std::int64_t> circled;
  };
  const std::vector<Case> cases{
      {"A", "A_5.txt", {1, 2, 3, 4, 7, 8, 9, 13, 14, 19}},
      {"B0", "B0_5.txt", {1, 2, 3, 4, 6, 7, 8, 11, 12, 16}},
      {"B1", "B1_5.txt", {1, 2, 3, 6, 7, 11}},
      {"E-", "E_minus_5.txt", {1,  2,  3,  4,  6,  7,  8,  9,  11, 12, 13, 16, 17,
                               18, 21, 22, 23, 26, 27, 31, 32, 36, 37, 41, 46, 51}},
      {"E+", "E_plus_5.txt", {1,  2,  3,  4,  6,  7,  8,  9,  11, 12, 13, 14, 17, 18, 19,
                              22, 23, 24, 27, 28, 29, 33, 34, 38, 39, 43, 44, 49, 54, 59}},
      {"C0", "C0_5.txt", {1, 2, 3, 4, 7, 8}},
      {"C1", "C1_5.txt", {1, 2, 3, 7}},
      {"L", "L_5.txt", {1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13, 17, 18, 22, 23, 27}},
  };
  for (const auto& c : cases) {
    const Abacus a = build_named(c.name, 5, 3);
    if (testsupport::values(a) != c.circled) fail(o, std::string(c.name) + " bead values differ");
    std::ifstream in(std::string(COREABACUS_GOLDEN_DIR) + "/" + c.file);
    std::ostringstream golden;
    golden << in.rdbuf();
    if (golden.str().empty()) fail(o, std::string("missing golden ") + c.file);
    else if (render_abacus(a, 4) != golden.str()) fail(o, std::string(c.name) + " rendering differs");
  }
  if (o.pass) o.detail = "8 renderings byte-exact";
  return o;
}

Outcome longest_weight() {
  Outcome o;
  for (std::int64_t s = 1; s <= 8; ++s) {
    for (std::int64_t m = 1; m <= 3; ++m) {
      const std::int64_t w = partition_of(build_L(s, m)).weight();
      if (w != longest_weight_formula(s, m)) {
        fail(o, "s=" + std::to_string(s) + " m=" + std::to_string(m) + ": " + std::to_string(w));
      }
    }
  }
  const std::int64_t w53 = partition_of(build_L(5, 3)).weight();
  const std::int64_t w42 = partition_of(build_L(4, 2)).weight();
  if (w53 != 63) fail(o, "(5,3) gave " + std::to_string(w53));
  if (w42 != 12) fail(o, "(4,2) gave " + std::to_string(w42));
  if (o.pass) o.detail = "24 cells; (5,3) -> 63, (4,2) -> 12";
  return o;
}

Outcome longest_brute_force() {
  Outcome o;
  int cells = 0;
  for (std::int64_t s = 1; s <= 6; ++s) {
    for (std::int64_t m = 1; m <= 3; ++m) {
      if (m * s - 1 < 1) continue;  // no (1,0,2) family
      ++cells;
      const CoreFamily f = enumerate_multi_cores({s, m * s - 1, m * s + 1});
      const Partition l = partition_of(build_L(s, m));
      std::size_t at_least = 0;
      bool member = false;
      for (const auto& p : f.members) {
        at_least += p.length() >= l.length();
        member = member || p == l;
      }
      if (!member || at_least != 1) {
        fail(o, "s=" + std::to_string(s) + " m=" + std::to_string(m));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cells) + " families, constructed core strictly longest";
  return o;
}

Outcome berger_probe() {
  Outcome o;
  const VerificationReport r = verify_claim("berger", parse_grid("s=1..6,m=1..3"));
  std::string summary;
  int supported = 0;
  for (const auto& cell : r.cells) {
    const std::string status = cell.extra.at("status").get<std::string>();
    const auto s = cell.params.at("s").get<std::int64_t>();
    const auto m = cell.params.at("m").get<std::int64_t>();
    supported += status == "SUPPORTED";
    if (status != "SUPPORTED") summary += " " + status + "@(" + std::to_string(s) + "," + std::to_string(m) + ")";
    if (m == 1 && s >= 2 && status != "SUPPORTED") {
      fail(o, "not SUPPORTED at (" + std::to_string(s) + ",1): " + status);
    }
  }
  if (r.cells.size() != 18) fail(o, "expected 18 cells, got " + std::to_string(r.cells.size()));
  if (o.pass) {
    o.detail = std::to_string(supported) + "/" + std::to_string(r.cells.size()) +
               " SUPPORTED;" + summary;
  }
  return o;
}

Outcome self_conjugate_examples() {
  Outcome o;
  const FamilyFilters sc{.distinct_parts = true, .self_conjugate = true};
  auto members = [&](std::int64_t s, std::int64_t t) {
    return apply_filters(enumerate_st_cores(s, t), sc).members;
  };
  const std::vector<Partition> staircases{{}, {1}, {2, 1}, {3, 2, 1}, {4, 3, 2, 1}};
  const std::vector<Partition> stated{{}, {1}, {3, 1}};
  std::string observed;
  for (auto [s, t, expected] : std::vector<std::tuple<std::int64_t, std::int64_t, std::vector<Partition>>>{
           {8, 9, staircases}, {9, 10, staircases}, {5, 14, stated}, {5, 16, stated}}) {
    const auto got = members(s, t);
    const std::int64_t count = count_cores({s, t}, sc);
    const std::int64_t formula =
        t == s + 1 ? self_conjugate_counts(SelfConjugateKind::kPlain, 1, s)
                   : self_conjugate_counts(t < 3 * s ? SelfConjugateKind::kMinus
                                                     : SelfConjugateKind::kPlus,
                                           3, s);
    const std::string where = "(" + std::to_string(s) + "," + std::to_string(t) + ")";
    observed += " " + where + "=" + list(got);
    if (count != static_cast<std::int64_t>(expected.size()) || count != formula) {
      fail(o, where + " count " + std::to_string(count));
    }
    if (got != expected) fail(o, where + " members " + list(got) + " != " + list(expected));
  }
  if (o.pass) o.detail = "counts and members exact;" + observed;
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      ++failures;
      if (failures <= 5) fail(o, what);
    }
  };
  for (std::int64_t n = 0; n <= 40; ++n) {
    oracle::for_each_partition(n, [&](const Partition& p) {
      const BeadSet x = partition_to_minimal_beadset(p);
      check(beadset_to_partition(x) == p && x.is_minimal(), "round trip " + to_string(p));
      const Partition c = conjugate(p);
      check(conjugate(c) == p && c.weight() == p.weight(), "involution " + to_string(p));
      check((is_self_conjugate(p) && has_distinct_parts(p)) == is_two_core(p),
            "2-core equivalence " + to_string(p));
      if (n <= 30) {
        const auto hooks = testsupport::diagram_hooks(p);
        for (std::int64_t t = 1; t <= 12; ++t) {
          const bool oracle = std::find(hooks.begin(), hooks.end(), t) == hooks.end();
          check(is_t_core(p, t) == oracle, "t-core " + to_string(p) + " t=" + std::to_string(t));
        }
      }
    });
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::int64_t> width(1, 8);
  std::uniform_int_distribution<std::int64_t> height(0, 7);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::int64_t s = width(rng);
    const std::int64_t t = width(rng);
    const Abacus a = testsupport::random_abacus(rng, s, height(rng));
    const Abacus b = testsupport::random_abacus(rng, s, height(rng));
    const Abacus a2 = testsupport::random_abacus(rng, t, height(rng));
    const Abacus b2 = testsupport::random_abacus(rng, t, height(rng));
    check(intersect(wedge(a, a2), wedge(b, b2)) == wedge(intersect(a, b), intersect(a2, b2)),
          "wedge/intersection trial " + std::to_string(trial));
  }
  if (cases < 10000) fail(o, "only " + std::to_string(cases) + " cases generated");
  if (failures > 0) fail(o, std::to_string(failures) + " failures");
  if (o.pass) o.detail = std::to_string(cases) + " cases, 0 failures";
  return o;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "unique maximal (s,t)-core weight, coprime s<t<=12", 60, maximal_st_cores},
      {2, "distinct-part (s,s+1)-core counts, s=1..10", 30, distinct_consecutive},
      {3, "distinct-part (s,ms-+1)-core recurrences and middle identity, s<=6, m<=3", 120,
       distinct_ms_pm_one},
      {4, "golden renderings of the eight named abaci for s=5, m=3", 1, golden_renderings},
      {5, "longest-core weight formula, s<=8, m<=3", 10, longest_weight},
      {6, "constructed longest core is strictly longest, s<=6, m<=3", 300, longest_brute_force},
      {7, "maximal (s,ms-1,ms+1)-core probe, s<=6, m<=3", 300, berger_probe},
      {8, "self-conjugate distinct-part counts and members", 30, self_conjugate_examples},
      {9, "property suites", 120, property_suites},
  };
  return all;
}

bool run(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > c.budget_seconds) {
    fail(o, "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds));
  }
  std::ostringstream time;
  time.precision(3);
  time << std::fixed << secs;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ["
            << time.str() << " s] " << o.detail << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);
  bool ok = true;
  for (const auto& c : criteria()) {
    if (only == 0 || only == c.id) ok = run(c) && ok;
  }
  return ok ? 0 : 1;
}
