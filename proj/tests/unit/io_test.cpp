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
#include <vector>

#include "coreabacus/io.hpp"
#include "support/oracles.hpp"

namespace {

using coreabacus::BeadSet;
using coreabacus::CoreFamily;
using coreabacus::Partition;
using nlohmann::json;

TEST(IoTest, PartitionRoundTrip) {
  const Partition p{4, 3, 2};
  const json j = p;
  EXPECT_EQ(j.dump(), "[4,3,2]");
  EXPECT_EQ(j.get<Partition>(), p);
  EXPECT_EQ(json(Partition{}).dump(), "[]");
  EXPECT_THROW(json::parse("[1,2]").get<Partition>(), coreabacus::PreconditionError);
  EXPECT_THROW(json::parse("{}").get<Partition>(), coreabacus::PreconditionError);
}

TEST(IoTest, BeadSetIsASortedArray) {
  const BeadSet x{6, 2, 4};
  EXPECT_EQ(json(x).dump(), "[2,4,6]");
  EXPECT_EQ(json::parse("[2,4,6]").get<BeadSet>(), x);
  EXPECT_THROW(json::parse("[4,2]").get<BeadSet>(), coreabacus::PreconditionError);
  EXPECT_THROW(json::parse("[2,2]").get<BeadSet>(), coreabacus::PreconditionError);
  EXPECT_THROW(json::parse("[-1,2]").get<BeadSet>(), coreabacus::PreconditionError);
}

TEST(IoTest, FamilyRoundTrip) {
  CoreFamily f = coreabacus::enumerate_st_cores(4, 7);
  f.filters.distinct_parts = true;
  f = coreabacus::filter_distinct(f);
  const json j = coreabacus::family_to_json(f);
  EXPECT_EQ(j.at("metadata").at("count"), f.size());
  EXPECT_EQ(j.at("metadata").at("filters"), json::array({"distinct"}));
  EXPECT_EQ(j.at("metadata").at("max_weight"), f.max_weight());
  const CoreFamily back = coreabacus::family_from_json(j);
  EXPECT_EQ(back.moduli, f.moduli);
  EXPECT_EQ(back.filters, f.filters);
  EXPECT_EQ(back.members, f.members);
}

TEST(IoTest, FamilyJsonIsValidated) {
  json j = coreabacus::family_to_json(coreabacus::enumerate_st_cores(3, 4));
  j["metadata"]["count"] = 4;
  EXPECT_THROW(coreabacus::family_from_json(j), coreabacus::PreconditionError);
  j["metadata"]["count"] = 5;
  j["metadata"]["filters"] = json::array({"bogus"});
  EXPECT_THROW(coreabacus::family_from_json(j), coreabacus::PreconditionError);
}

}  // namespace
