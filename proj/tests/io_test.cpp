// Copyright 2026 The Noether Authors
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

#include <string>

#include "noether/builtins.hpp"
#include "noether/errors.hpp"
#include "noether/group_form.hpp"
#include "noether/io.hpp"
#include "noether/lattice.hpp"
#include "noether/zigzag.hpp"

namespace noether {
namespace {

const std::string kData = NOETHER_DATA_DIR;

std::string loadError(const std::string& ref) {
  try {
    loadGroup(ref);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

TEST(Io, LoadsGroupsFromEverySource) {
  EXPECT_EQ(loadGroup("builtin:S3").order(), 6u);
  const auto file = loadGroup(kData + "/z6.json");
  EXPECT_EQ(file.table(), builtinGroup("Z6").table());
  EXPECT_EQ(file.name(), "Z6");
  const auto inline_ = loadGroup(R"({"name":"Z2","order":2,"table":[[0,1],[1,0]]})");
  EXPECT_EQ(inline_.order(), 2u);
  const auto round = loadGroup(groupToJson(builtinGroup("Q8")));
  EXPECT_EQ(round.table(), builtinGroup("Q8").table());
}

TEST(Io, GroupErrorsNameTheField) {
  EXPECT_NE(loadError(R"({"name":"x","order":3,"table":[[0,1],[1,0]]})")
                .find("order"),
            std::string::npos);
  EXPECT_NE(loadError(R"({"name":"x","order":2})").find("table"),
            std::string::npos);
  EXPECT_NE(loadError(R"({"name":"x","order":2,"table":[[0,1],[1,"a"]]})"), "");
  EXPECT_NE(loadError("{not json"), "");
  EXPECT_NE(loadError(kData + "/missing.json"), "");
  EXPECT_NE(loadError("builtin:Nope"), "");
}

TEST(Io, LoadsLattices) {
  EXPECT_EQ(loadLattice("chain:4"), chainLattice(4));
  EXPECT_EQ(loadLattice("diamond:3"), diamondLattice(3));
  EXPECT_EQ(loadLattice(kData + "/diamond.json"), diamondLattice(3));
  EXPECT_EQ(loadLattice("subgroups:builtin:Z6"), diamondLattice(2));
  EXPECT_EQ(loadLattice(R"({"size":3,"order":[[0,1],[1,2],[0,2]]})"),
            chainLattice(3));
  try {
    loadLattice(kData + "/pentagon.json");
    FAIL() << "pentagon accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("witness"), std::string::npos);
  }
  EXPECT_THROW(loadLattice("subgroups:builtin:D8"), ValidationError);
  EXPECT_THROW(loadLattice("chain:0"), ValidationError);
}

TEST(Io, LoadsSeriesAndArguments) {
  const auto s = loadSeries(kData + "/z6_through_3.json");
  EXPECT_EQ(s.group.order(), 6u);
  ASSERT_EQ(s.terms.size(), 3u);
  EXPECT_EQ(s.terms[1], (ElementList{0, 2, 4}));
  EXPECT_THROW(loadSeries(R"({"group":"builtin:Z6"})"), ValidationError);
  EXPECT_EQ(parseElementList("[2, 0]"), (ElementList{2, 0}));
  EXPECT_EQ(parseIntervalSpec("[[0],[0,3]]").second, (ElementList{0, 3}));
  EXPECT_THROW(parseIntervalSpec("[[0]]"), ValidationError);
  EXPECT_THROW(parseElementList("[-1]"), ValidationError);
  EXPECT_EQ(parseTermList("[[0,1],[0]]").size(), 2u);
}

TEST(Io, BuildsZigzagsFromSpecs) {
  const auto spec = loadZigzag(kData + "/z6_round_trip.json");
  ASSERT_EQ(spec.legs.size(), 2u);
  EXPECT_EQ(spec.legs[0].kind, ZigzagLegSpec::Kind::kEmbed);
  EXPECT_EQ(spec.legs[1].node, std::optional<std::size_t>(0));
  auto form = asGroupForm(spec.groups);
  const auto z = buildZigzag(*form, spec);
  EXPECT_EQ(z.size(), 2u);
  EXPECT_EQ(z.start(), z.end());
  const auto x = form->subobject(ObjectId{0}, ElementList{0, 3});
  EXPECT_EQ(chase(*form, z, x), form->bottom(ObjectId{0}));

  const auto maps = loadZigzag(
      R"({"groups":["builtin:Z6","builtin:Z3"],
          "legs":[{"hom":{"map":[0,1,2,0,1,2],"to":1},"dir":"R"}]})");
  auto form2 = asGroupForm(maps.groups);
  const auto z2 = buildZigzag(*form2, maps);
  EXPECT_EQ(z2.end(), ObjectId{1});

  EXPECT_THROW(loadZigzag(R"({"group":"builtin:Z6","legs":[{"hom":{},"dir":"R"}]})"),
               ValidationError);
  EXPECT_THROW(loadZigzag(R"({"group":"builtin:Z6","legs":[{"hom":{"embed":[0]},"dir":"X"}]})"),
               ValidationError);
  const auto bad = loadZigzag(
      R"({"group":"builtin:Z6","legs":[{"hom":{"project":[0,3]},"dir":"L"}]})");
  auto form3 = asGroupForm(bad.groups);
  EXPECT_THROW(buildZigzag(*form3, bad), ValidationError);
}

}  // namespace
}  // namespace noether
