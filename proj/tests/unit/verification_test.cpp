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


#include <gtest/gtest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "coreabacus/verification.hpp"
#include "support/oracles.hpp"

namespace {

using coreabacus::Grid;
using coreabacus::GuardRails;
using coreabacus::VerificationReport;

nlohmann::json without_timing(const VerificationReport& r) {
  nlohmann::json j = r.to_json();
  j.erase("elapsed_ms");
  return j;
}

TEST(GridTest, ParseAndPrint) {
  const Grid g = coreabacus::parse_grid("s=1..10,m=2");
  EXPECT_EQ(g.at("s"), (coreabacus::AxisRange{1, 10}));
  EXPECT_EQ(g.at("m"), (coreabacus::AxisRange{2, 2}));
  EXPECT_EQ(coreabacus::grid_to_string(g), "m=2,s=1..10");
  EXPECT_THROW(coreabacus::parse_grid("s"), coreabacus::PreconditionError);
  EXPECT_THROW(coreabacus::parse_grid("s=x"), coreabacus::PreconditionError);
  EXPECT_THROW(coreabacus::parse_grid("s=5..1"), coreabacus::PreconditionError);
  EXPECT_THROW(coreabacus::parse_grid("s=1,s=2"), coreabacus::PreconditionError);
  EXPECT_TRUE(coreabacus::parse_grid("").empty());
}

TEST(GuardRailsTest, BuiltinCoversEveryClaim) {
  const GuardRails& rails = GuardRails::builtin();
  EXPECT_FALSE(rails.version.empty());
  EXPECT_GT(rails.max_family_size, 0);
  for (const auto& claim : coreabacus::claim_registry()) {
    const auto& cr = rails.for_claim(claim.id);
    for (const auto& axis : claim.axes) {
      ASSERT_TRUE(cr.defaults.contains(axis)) << claim.id << " " << axis;
      ASSERT_TRUE(cr.max.contains(axis)) << claim.id << " " << axis;
      EXPECT_LE(cr.defaults.at(axis).hi, cr.max.at(axis));
    }
  }
  EXPECT_THROW(rails.for_claim("nope"), coreabacus::PreconditionError);
}

TEST(GuardRailsTest, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "coreabacus_rails_test.json";
  {
    std::ofstream out(path);
    out << R"({"version":"9","max_family_size":10,"claims":{"xiong":{"default":{"s":[1,3]},"max":{"s":4}}}})";
  }
  const GuardRails rails = GuardRails::load(path.string());
  EXPECT_EQ(rails.version, "9");
  const auto report = coreabacus::verify_claim("xiong", std::nullopt, rails);
  EXPECT_EQ(report.cells.size(), 3u);
  EXPECT_THROW(coreabacus::verify_claim("xiong", coreabacus::parse_grid("s=1..5"), rails),
               coreabacus::GuardRailError);
  std::filesystem::remove(path);
  EXPECT_THROW(GuardRails::load(path.string()), coreabacus::PreconditionError);
}

TEST(VerifyTest, BreachSuggestsClampedGrid) {
  try {
    coreabacus::verify_claim("xiong", coreabacus::parse_grid("s=1..40"));
    FAIL() << "expected a guard-rail breach";
  } catch (const coreabacus::GuardRailError& e) {
    EXPECT_EQ(e.suggestion(), "s=1..14");
  }
  try {
    coreabacus::verify_claim("straub-minus", coreabacus::parse_grid("s=20..30,m=1..2"));
    FAIL() << "expected a guard-rail breach";
  } catch (const coreabacus::GuardRailError& e) {
    EXPECT_EQ(e.suggestion(), "m=1..2,s=8");
  }
}

TEST(VerifyTest, RejectsUnknownClaimsAxesAndLowValues) {
  EXPECT_THROW(coreabacus::verify_claim("bogus"), coreabacus::PreconditionError);
  EXPECT_THROW(coreabacus::verify_claim("xiong", coreabacus::parse_grid("m=1..2")),
               coreabacus::PreconditionError);
  EXPECT_THROW(coreabacus::verify_claim("xiong", coreabacus::parse_grid("s=0..2")),
               coreabacus::PreconditionError);
}

TEST(VerifyTest, XiongDefaultGridPasses) {
  const auto report = coreabacus::verify_claim("xiong");
  EXPECT_EQ(report.cells.size(), 10u);
  EXPECT_TRUE(report.all_pass());
  EXPECT_EQ(report.cells.back().expected, 89);
  EXPECT_EQ(report.cells.back().params, (nlohmann::json{{"s", 10}}));
}

TEST(VerifyTest, EverySmallGridPasses) {
  const std::vector<std::pair<std::string, std::string>> runs{
      {"xiong", "s=1..8"},
      {"straub-minus", "s=1..5,m=1..3"},
      {"straub-plus", "s=1..5,m=1..3"},
      {"middle", "s=1..5,m=1..3"},
      {"olsson-stanton", "s=1..8,t=1..9"},
      {"sylvester", "s=1..7,t=1..8"},
      {"emax", "s=1..5,m=1..3"},
      {"longest-m2", "s=1..5,m=1..3"},
      {"row-structure", "s=1..5,m=1..3"},
      {"two-conj", "n=0..20"},
      {"fstar", "s=1..10"},
      {"e-minus-star", "s=1..7,m=1..3"},
      {"e-plus-star", "s=1..7,m=1..3"},
      {"berger", "s=1..5,m=1..3"},
  };
  for (const auto& [claim, grid] : runs) {
    const auto report = coreabacus::verify_claim(claim, coreabacus::parse_grid(grid));
    EXPECT_FALSE(report.cells.empty()) << claim;
    EXPECT_TRUE(report.all_pass()) << claim << "\n" << report.to_json().dump(1);
  }
}

TEST(VerifyTest, SkipsDegenerateCells) {
  // Only coprime s < t contribute.
  const auto os = coreabacus::verify_claim("olsson-stanton", coreabacus::parse_grid("s=4,t=4..8"));
  EXPECT_EQ(os.cells.size(), 2u);
  // Berger at (1,1) has no (1,0,2) family to examine.
  const auto b = coreabacus::verify_claim("berger", coreabacus::parse_grid("s=1,m=1"));
  ASSERT_EQ(b.cells.size(), 1u);
  EXPECT_EQ(b.cells[0].extra.at("status"), "UNTESTED");
}

TEST(VerifyTest, CellsAreCheckedNotAssumed) {
  // Every pass flag is exactly expected == observed.
  const auto report = coreabacus::verify_claim("emax", coreabacus::parse_grid("s=1..4,m=1..2"));
  for (const auto& cell : report.cells) {
    EXPECT_EQ(cell.pass, cell.expected == cell.observed);
  }
}

TEST(VerifyTest, BergerStatusesAndDivisibility) {
  const auto report = coreabacus::verify_claim("berger", coreabacus::parse_grid("s=2..6,m=1..3"));
  for (const auto& cell : report.cells) {
    EXPECT_EQ(cell.extra.at("status"), "SUPPORTED") << cell.params;
    const auto s = cell.params.at("s").get<std::int64_t>();
    EXPECT_EQ(cell.extra.contains("m_squared_divides"), s % 2 == 0);
    if (s % 2 == 0) {
      const auto m = cell.params.at("m").get<std::int64_t>();
      const auto w = cell.observed.at("max_weight").get<std::int64_t>();
      EXPECT_EQ(cell.extra.at("m_squared_divides").get<bool>(), w % (m * m) == 0) << cell.params;
    }
  }
  EXPECT_EQ(report.cells.size(), 15u);
}

TEST(VerifyTest, DivisibilityCheck) {
  EXPECT_TRUE(coreabacus::divisibility_check(4, 2));
  EXPECT_TRUE(coreabacus::divisibility_check(2, 1));
  // Brute-force maxima: (6,2) -> 57, (4,3) -> 30, (2,2) -> 1.
  EXPECT_FALSE(coreabacus::divisibility_check(6, 2));
  EXPECT_FALSE(coreabacus::divisibility_check(4, 3));
  EXPECT_FALSE(coreabacus::divisibility_check(2, 2));
  EXPECT_TRUE(coreabacus::divisibility_check(6, 1));
  EXPECT_THROW(coreabacus::divisibility_check(5, 2), coreabacus::PreconditionError);
  EXPECT_THROW(coreabacus::divisibility_check(4, 0), coreabacus::PreconditionError);
}

TEST(VerifyTest, WorkerCountDoesNotChangeTheReport) {
  const auto grid = coreabacus::parse_grid("s=1..6,m=1..3");
  const auto one = coreabacus::verify_claim("straub-plus", grid, GuardRails::builtin(), 1);
  const auto many = coreabacus::verify_claim("straub-plus", grid, GuardRails::builtin(), 8);
  EXPECT_EQ(without_timing(one), without_timing(many));
}

TEST(VerifyTest, ReportJsonShape) {
  const auto report = coreabacus::verify_claim("fstar", coreabacus::parse_grid("s=8..9"));
  const auto j = report.to_json();
  EXPECT_EQ(j.at("claim"), "fstar");
  EXPECT_EQ(j.at("grid"), (nlohmann::json{{"s", {8, 9}}}));
  ASSERT_EQ(j.at("cells").size(), 2u);
  for (const auto& cell : j.at("cells")) {
    EXPECT_EQ(cell.at("expected"), 5);
    EXPECT_EQ(cell.at("observed"), 5);
    EXPECT_EQ(cell.at("pass"), true);
  }
  EXPECT_TRUE(j.at("elapsed_ms").is_number_integer());
}

}  // namespace
