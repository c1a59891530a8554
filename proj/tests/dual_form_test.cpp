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

#include <random>

#include "noether/builtins.hpp"
#include "noether/group_form.hpp"
#include "noether/lattice_form.hpp"

namespace noether {
namespace {

TEST(DualForm, SwapsOrderAndImages) {
  auto inner = asGroupForm({builtinGroup("Z6"), builtinGroup("Z3")});
  const ObjectId z6{0};
  const ObjectId z3{1};
  const auto f = inner->registerHom(z6, z3, {0, 1, 2, 0, 1, 2});
  const auto dual = dualize(inner);
  EXPECT_EQ(dualSource(*dual), inner);
  EXPECT_EQ(dualSource(*inner), nullptr);

  EXPECT_EQ(dual->bottom(z6), inner->top(z6));
  EXPECT_EQ(dual->top(z6), inner->bottom(z6));
  const auto a = inner->subobject(z6, std::vector<std::uint32_t>{0, 3});
  const auto b = inner->subobject(z6, std::vector<std::uint32_t>{0, 2, 4});
  EXPECT_EQ(dual->meet(a, b), inner->join(a, b));
  EXPECT_TRUE(dual->leq(inner->top(z6), a));

  const MorphismRef op{z3, z6, f.id};
  EXPECT_TRUE(dual->contains(op));
  EXPECT_FALSE(dual->contains(f));
  for (const auto& y : fiberLattice(*inner, z3).elements()) {
    EXPECT_EQ(dual->directImage(op, y), inner->inverseImage(f, y));
  }
  // Normal and conormal trade places; in groups every subobject is conormal.
  const auto n = dual->normality(inner->subobject(z6, std::vector<std::uint32_t>{0, 3}));
  EXPECT_TRUE(n.isNormal);
  EXPECT_TRUE(n.isConormal);
  EXPECT_EQ(dual->label(), "dual(" + inner->label() + ")");
}

TEST(DualForm, FactorizationSwapsParts) {
  auto inner = asGroupForm({builtinGroup("Z6"), builtinGroup("Z3")});
  const auto f = inner->registerHom(ObjectId{0}, ObjectId{1},
                                    {0, 2, 1, 0, 2, 1});
  const auto dual = dualize(inner);
  const MorphismRef op{f.codomain, f.domain, f.id};
  const auto t = dual->factorize(op);
  EXPECT_TRUE(isProjection(*dual, t.projectionPart));
  EXPECT_TRUE(isIsomorphism(*dual, t.isoPart));
  EXPECT_TRUE(isEmbedding(*dual, t.embeddingPart));
  EXPECT_EQ(dual->compose(t.embeddingPart,
                          dual->compose(t.isoPart, t.projectionPart)),
            op);
}

// The dual of the dual answers every query exactly like the original.
template <typename Inner>
void expectDoubleDualIsIdentity(std::shared_ptr<Inner> inner,
                                std::uint64_t seed) {
  const auto twice = dualize(dualize(inner));
  const auto objects = inner->objects();
  const auto homs = inner->registeredMorphisms();
  ASSERT_FALSE(homs.empty());
  std::mt19937_64 rng(seed);
  auto pick = [&](ObjectId o) {
    return SubobjectRef{o, std::uint32_t(rng() % inner->fiberSize(o))};
  };
  for (int q = 0; q < 1000; ++q) {
    const auto o = objects[rng() % objects.size()];
    const auto a = pick(o);
    const auto b = pick(o);
    const auto f = homs[rng() % homs.size()];
    switch (q % 6) {
      case 0:
        ASSERT_EQ(twice->leq(a, b), inner->leq(a, b));
        break;
      case 1:
        ASSERT_EQ(twice->meet(a, b), inner->meet(a, b));
        ASSERT_EQ(twice->join(a, b), inner->join(a, b));
        break;
      case 2: {
        const auto x = pick(f.domain);
        ASSERT_EQ(twice->directImage(f, x), inner->directImage(f, x));
        break;
      }
      case 3: {
        const auto y = pick(f.codomain);
        ASSERT_EQ(twice->inverseImage(f, y), inner->inverseImage(f, y));
        break;
      }
      case 4:
        ASSERT_EQ(twice->normality(a), inner->normality(a));
        ASSERT_EQ(twice->embedding(a), inner->embedding(a));
        ASSERT_EQ(twice->projection(a), inner->projection(a));
        break;
      default:
        ASSERT_EQ(twice->factorize(f), inner->factorize(f));
        break;
    }
  }
}

TEST(DualForm, DoubleDualOnGroups) {
  auto inner = asGroupForm({builtinGroup("D8"), builtinGroup("Z4"),
                            builtinGroup("S3"), builtinGroup("Z2")});
  inner->registerHom(ObjectId{0}, ObjectId{3}, {0, 0, 0, 0, 1, 1, 1, 1});
  inner->registerHom(ObjectId{1}, ObjectId{3}, {0, 1, 0, 1});
  inner->registerHom(ObjectId{3}, ObjectId{1}, {0, 2});
  expectDoubleDualIsIdentity(inner, 11);
}

TEST(DualForm, DoubleDualOnLattices) {
  auto inner = asLatticeForm({diamondLattice(3), chainLattice(2)});
  inner->registerConnection(ObjectId{1}, ObjectId{0}, {{0, 1}, {0, 1, 0, 0, 1}});
  expectDoubleDualIsIdentity(inner, 12);
}

}  // namespace
}  // namespace noether
