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

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

#include "noether/builtins.hpp"
#include "noether/errors.hpp"
#include "noether/finite_group.hpp"
#include "noether/isomorphism.hpp"
#include "noether/lattice.hpp"
#include "test_support.hpp"

namespace noether {
namespace {

using testing::Elements;

std::set<Elements> asSets(const std::vector<SubgroupSet>& subs) {
  std::set<Elements> out;
  for (const auto& s : subs) out.insert(s.elements());
  return out;
}

TEST(FiniteGroup, RejectsMalformedTables) {
  EXPECT_THROW(FiniteGroup::fromTable("empty", {}), ValidationError);
  EXPECT_THROW(FiniteGroup::fromTable("ragged", {{0, 1}, {1}}),
               ValidationError);
  EXPECT_THROW(FiniteGroup::fromTable("range", {{0, 1}, {1, 2}}),
               ValidationError);
  EXPECT_THROW(FiniteGroup::fromTable("identity", {{1, 0}, {0, 1}}),
               ValidationError);
  EXPECT_THROW(FiniteGroup::fromTable("latin", {{0, 1}, {1, 1}}),
               ValidationError);
  // A Latin square with identity 0 that is not associative (order 5 loop).
  const FiniteGroup::Table loop{{0, 1, 2, 3, 4},
                                {1, 0, 3, 4, 2},
                                {2, 4, 0, 1, 3},
                                {3, 2, 4, 0, 1},
                                {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::fromTable("loop", loop);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("associative"), std::string::npos);
  }
}

TEST(FiniteGroup, CyclicSixHasTheDiamond) {
  const auto g = builtinGroup("Z6");
  const auto subs = allSubgroups(g);
  ASSERT_EQ(subs.size(), 4u);
  EXPECT_EQ(formatElements(subs[0]), "{0}");
  EXPECT_EQ(formatElements(subs[1]), "{0,3}");
  EXPECT_EQ(formatElements(subs[2]), "{0,2,4}");
  EXPECT_EQ(formatElements(subs[3]), "{0,1,2,3,4,5}");
}

TEST(FiniteGroup, SubgroupCountsMatchSubsetEnumeration) {
  const std::map<std::string, std::size_t> expected{
      {"Z1", 1}, {"Z4", 3}, {"V4", 5}, {"S3", 6}, {"D8", 10},
      {"Q8", 6}, {"Z12", 6}, {"A4", 10}, {"D12", 16}};
  for (const auto& [name, count] : expected) {
    const auto g = builtinGroup(name);
    const auto subs = allSubgroups(g);
    EXPECT_EQ(subs.size(), count) << name;
    EXPECT_EQ(asSets(subs), testing::subgroupsBySubsets(g)) << name;
    for (std::size_t i = 1; i < subs.size(); ++i) {
      EXPECT_TRUE(canonicalLess(subs[i - 1], subs[i])) << name;
    }
  }
}

TEST(FiniteGroup, DihedralEightAgreesWithSquareSymmetries) {
  const auto square = testing::squareSymmetries();
  const auto d8 = builtinGroup("D8");
  EXPECT_EQ(square.table(), d8.table());
  EXPECT_EQ(asSets(allSubgroups(d8)), testing::subgroupsBySubsets(square));
  for (const auto& s : allSubgroups(d8)) {
    EXPECT_EQ(isNormalSubgroup(d8, s),
              testing::conjugationNormal(square, s.elements()))
        << formatElements(s);
  }
  // {e, s} is not normal, the rotations are.
  EXPECT_FALSE(isNormalSubgroup(d8, SubgroupSet::fromElements(Elements{0, 4})));
  EXPECT_TRUE(
      isNormalSubgroup(d8, SubgroupSet::fromElements(Elements{0, 1, 2, 3})));
}

TEST(FiniteGroup, GeneratedSubgroupAndRangeCheck) {
  const auto g = builtinGroup("Z12");
  EXPECT_EQ(formatElements(subgroupGenerated(g, Elements{8})), "{0,4,8}");
  EXPECT_EQ(formatElements(subgroupGenerated(g, Elements{4, 6})),
            "{0,2,4,6,8,10}");
  EXPECT_THROW(subgroupGenerated(g, Elements{12}), DomainError);
}

TEST(FiniteGroup, QuotientByNormalSubgroup) {
  const auto g = builtinGroup("Z6");
  const auto q = quotientGroup(g, SubgroupSet::fromElements(Elements{0, 3}));
  EXPECT_EQ(q.group.order(), 3u);
  EXPECT_EQ(q.projection, (Elements{0, 1, 2, 0, 1, 2}));
  EXPECT_TRUE(isHomomorphism(g, q.group, q.projection));
  EXPECT_TRUE(isomorphic(q.group, builtinGroup("Z3")));

  const auto d8 = builtinGroup("D8");
  EXPECT_THROW(quotientGroup(d8, SubgroupSet::fromElements(Elements{0, 4})),
               DomainError);
  const auto center = quotientGroup(d8, SubgroupSet::fromElements(Elements{0, 2}));
  EXPECT_EQ(identifyGroup(center.group), "Z2xZ2");
}

TEST(FiniteGroup, RealizedSubgroupIncludes) {
  const auto g = builtinGroup("S3");
  for (const auto& s : allSubgroups(g)) {
    const auto r = realizeSubgroup(g, s);
    EXPECT_EQ(r.group.order(), s.size());
    EXPECT_TRUE(isHomomorphism(r.group, g, r.inclusion));
    EXPECT_EQ(SubgroupSet::fromElements(r.inclusion), s);
  }
}

TEST(Catalogue, CountsPerOrder) {
  const std::map<std::size_t, std::size_t> expected{
      {1, 1}, {2, 1}, {3, 1}, {4, 2},  {5, 1},  {6, 2},  {7, 1},  {8, 5},
      {9, 2}, {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {16, 14}};
  std::map<std::size_t, std::size_t> counts;
  for (const auto& entry : smallGroupCatalogue()) ++counts[entry.group.order()];
  EXPECT_EQ(counts, expected);
}

TEST(Catalogue, EntriesArePairwiseNonIsomorphic) {
  const auto& cat = smallGroupCatalogue();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      if (cat[i].group.order() != cat[j].group.order()) continue;
      EXPECT_FALSE(isomorphic(cat[i].group, cat[j].group))
          << cat[i].label << " vs " << cat[j].label;
    }
  }
}

TEST(Catalogue, IdentifiesBuiltinsAndRelabelledCopies) {
  EXPECT_EQ(identifyGroup(builtinGroup("D8")), "D8");
  EXPECT_EQ(identifyGroup(builtinGroup("V4")), "Z2xZ2");
  EXPECT_EQ(identifyGroup(builtinGroup("S3")), "S3");
  EXPECT_EQ(identifyGroup(builtinGroup("Z6")), "Z6");
  EXPECT_EQ(identifyGroup(directProduct(builtinGroup("Z3"), builtinGroup("Z2"))),
            "Z6");
  EXPECT_EQ(identifyGroup(testing::squareSymmetries()), "D8");
  EXPECT_THROW(identifyGroup(builtinGroup("Z17")), UnsupportedError);
}

TEST(Isomorphism, WitnessIsABijectiveHomomorphism) {
  const auto a = directProduct(builtinGroup("Z2"), builtinGroup("Z3"));
  const auto b = builtinGroup("Z6");
  const auto map = findIsomorphism(a, b);
  ASSERT_TRUE(map.has_value());
  EXPECT_TRUE(isHomomorphism(a, b, *map));
  EXPECT_EQ(std::set<std::uint32_t>(map->begin(), map->end()).size(), 6u);
  EXPECT_FALSE(findIsomorphism(builtinGroup("Z4"), builtinGroup("V4")));
  EXPECT_FALSE(findIsomorphism(builtinGroup("D8"), builtinGroup("Q8")));
}

// Modularity of the subgroup lattice, checked by brute force over triples.
bool modularBySubsets(const FiniteGroup& g) {
  const auto subs = testing::subgroupsBySubsets(g);
  std::vector<Elements> all(subs.begin(), subs.end());
  auto meet = [](const Elements& a, const Elements& b) {
    Elements out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
  };
  auto join = [&](const Elements& a, const Elements& b) {
    const Elements* best = nullptr;
    for (const auto& c : all) {
      if (std::includes(c.begin(), c.end(), a.begin(), a.end()) &&
          std::includes(c.begin(), c.end(), b.begin(), b.end()) &&
          (best == nullptr || c.size() < best->size())) {
        best = &c;
      }
    }
    return *best;
  };
  for (const auto& x : all) {
    for (const auto& z : all) {
      if (!std::includes(z.begin(), z.end(), x.begin(), x.end())) continue;
      for (const auto& y : all) {
        if (join(x, meet(y, z)) != meet(join(x, y), z)) return false;
      }
    }
  }
  return true;
}

TEST(Catalogue, SmallestNonModularSubgroupLatticeIsDihedralEight) {
  for (const auto& entry : smallGroupCatalogue()) {
    const auto& g = entry.group;
    if (g.order() > 8) continue;
    const bool modular = modularBySubsets(g);
    EXPECT_EQ(modular, entry.label != "D8") << entry.label;
    if (modular) {
      EXPECT_NO_THROW(subgroupLattice(g)) << entry.label;
    } else {
      EXPECT_THROW(subgroupLattice(g), ValidationError) << entry.label;
    }
  }
}

TEST(Builtins, UnknownNameIsADomainError) {
  EXPECT_THROW(builtinGroup("Z0"), DomainError);
  EXPECT_THROW(builtinGroup("D7"), DomainError);
  EXPECT_THROW(builtinGroup("nonsense"), DomainError);
}

}  // namespace
}  // namespace noether
