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

#include <functional>

#include "noether/builtins.hpp"
#include "noether/errors.hpp"
#include "noether/group_form.hpp"
#include "noether/isomorphism.hpp"
#include "noether/series.hpp"
#include "noether/subfactor.hpp"
#include "test_support.hpp"

namespace noether {
namespace {

using testing::Elements;

const Elements kZ6{0, 1, 2, 3, 4, 5};

class SeriesTest : public ::testing::Test {
 protected:
  SeriesTest() : form_(asGroupForm({builtinGroup("Z6")})) {}

  SubobjectRef sub(const Elements& e) const {
    return form_->subobject(g_, e);
  }
  SubnormalSeries series(const std::vector<Elements>& terms) const {
    std::vector<SubobjectRef> refs;
    for (const auto& t : terms) refs.push_back(sub(t));
    return validateSeries(*form_, g_, refs);
  }
  std::string rejection(const std::vector<Elements>& terms) const {
    try {
      series(terms);
    } catch (const ValidationError& e) {
      return e.what();
    }
    return "";
  }

  std::shared_ptr<GroupForm> form_;
  ObjectId g_{0};
};

TEST_F(SeriesTest, ValidatesSteps) {
  EXPECT_EQ(series({kZ6, {0, 2, 4}, {0}}).length(), 2u);
  EXPECT_EQ(series({kZ6, {0}}).length(), 1u);
  EXPECT_NE(rejection({{0, 2, 4}, {0}}).find("top"), std::string::npos);
  EXPECT_NE(rejection({kZ6, {0, 2, 4}}).find("bottom"), std::string::npos);
  EXPECT_NE(rejection({kZ6, {0, 3}, {0, 3}, {0}}).find("step 1"),
            std::string::npos);
  EXPECT_NE(rejection({kZ6, {0, 3}, {0, 2, 4}, {0}}), "");
  EXPECT_THROW(validateSeries(*form_, g_, {}), ValidationError);

  auto d8 = asGroupForm({builtinGroup("D8")});
  const ObjectId g{0};
  auto d8sub = [&](const Elements& e) { return d8->subobject(g, e); };
  EXPECT_NO_THROW(validateSeries(
      *d8, g, {d8->top(g), d8sub({0, 2, 4, 6}), d8sub({0, 4}), d8sub({0})}));
  try {
    validateSeries(*d8, g, {d8->top(g), d8sub({0, 4}), d8sub({0})});
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("step 0"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("not a subfactor"),
              std::string::npos);
  }
}

TEST_F(SeriesTest, RefinementOfTheDiamondSeries) {
  const auto s = series({kZ6, {0}});
  const auto t = series({kZ6, {0, 2, 4}, {0}});
  const auto r = refinePair(*form_, s, t);
  EXPECT_EQ(r.left, t);
  EXPECT_EQ(r.right, t);
  EXPECT_EQ(r.rawLeft.size(), 3u);
  EXPECT_EQ(r.rawRight.size(), 3u);
  EXPECT_TRUE(refines(r.left, s));
  EXPECT_TRUE(refines(r.right, t));
  EXPECT_FALSE(refines(s, t));
  EXPECT_EQ(r.matching, (std::vector<std::pair<std::size_t, std::size_t>>{
                            {0, 0}, {1, 1}}));
}

TEST_F(SeriesTest, RefinementOfASeriesWithItself) {
  const auto s = series({kZ6, {0, 3}, {0}});
  const auto r = refinePair(*form_, s, s);
  EXPECT_EQ(r.left, s);
  EXPECT_EQ(r.right, s);
  EXPECT_EQ(r.matching, (std::vector<std::pair<std::size_t, std::size_t>>{
                            {0, 0}, {1, 1}}));
}

TEST_F(SeriesTest, MatchingSwapsTheTwoCompositionSeries) {
  const auto s = series({kZ6, {0, 3}, {0}});
  const auto t = series({kZ6, {0, 2, 4}, {0}});
  const auto r = refinePair(*form_, s, t);
  EXPECT_EQ(r.left, s);
  EXPECT_EQ(r.right, t);
  EXPECT_EQ(r.matching, (std::vector<std::pair<std::size_t, std::size_t>>{
                            {0, 1}, {1, 0}}));
  const auto p = projectivelyIsomorphic(*form_, s, t);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->pairs, r.matching);
  EXPECT_EQ(quotientTypeMultiset(*form_, s),
            (std::vector<std::string>{"Z2", "Z3"}));
  EXPECT_EQ(quotientTypeMultiset(*form_, t),
            (std::vector<std::string>{"Z2", "Z3"}));
  EXPECT_FALSE(projectivelyIsomorphic(*form_, s, series({kZ6, {0}})));
}

TEST(Series, RefinementInTheSymmetricGroup) {
  const auto s3 = builtinGroup("S3");
  auto form = asGroupForm({s3});
  const ObjectId g{0};
  SubobjectRef a3{};
  for (const auto& x : fiberLattice(*form, g).elements()) {
    if (form->subgroup(x).size() == 3) a3 = x;
  }
  const SubnormalSeries s = validateSeries(*form, g, {form->top(g), form->bottom(g)});
  const SubnormalSeries t =
      validateSeries(*form, g, {form->top(g), a3, form->bottom(g)});
  const auto r = refinePair(*form, s, t);
  EXPECT_EQ(r.left, t);
  EXPECT_EQ(quotientTypeMultiset(*form, r.left),
            (std::vector<std::string>{"Z2", "Z3"}));
}

TEST(Series, TrivialSeriesOfAPrimeCyclicGroup) {
  auto form = asGroupForm({builtinGroup("Z5")});
  const ObjectId g{0};
  const auto s = validateSeries(*form, g, {form->top(g), form->bottom(g)});
  EXPECT_EQ(quotientTypeMultiset(*form, s), (std::vector<std::string>{"Z5"}));
  EXPECT_TRUE(isCompositionSeries(*form, s));
}

TEST(Series, QuotientTypesNeedTheGroupInstance) {
  auto form = asGroupForm({builtinGroup("Z4")});
  const auto dual = dualize(form);
  const ObjectId g{0};
  const SubnormalSeries s{g, {dual->top(g), dual->bottom(g)}};
  EXPECT_THROW(quotientTypeMultiset(*dual, s), UnsupportedError);
}

TEST_F(SeriesTest, ContainmentClaimFailsOnTheDiamond) {
  const auto s = series({kZ6, {0}});
  const auto t = series({kZ6, {0, 2, 4}, {0}});
  const Interval candidate{sub({0, 3}), sub(kZ6)};
  const auto v = e1Check(*form_, s, t, candidate, 0, 1);
  EXPECT_FALSE(v.contained);
  EXPECT_EQ(v.projection, (Interval{sub({0}), sub({0, 2, 4})}));
  EXPECT_EQ(v.witness, (Interval{sub({0}), sub({0, 2, 4})}));
  EXPECT_EQ(projectInterval(*form_, v.witness, candidate),
            (Interval{sub({0, 3}), sub(kZ6)}));

  const auto self = e1Check(*form_, s, t, v.projection, 0, 1);
  EXPECT_TRUE(self.contained);
  EXPECT_THROW(e1Check(*form_, s, t, candidate, 1, 0), DomainError);
}

TEST_F(SeriesTest, RefinementIsNotCoarsestOnTheDiamond) {
  const auto s = series({kZ6, {0}});
  const auto t = series({kZ6, {0, 2, 4}, {0}});
  const auto report = coarsestCheck(*form_, s, t);
  EXPECT_FALSE(report.coarsest);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->first, series({kZ6, {0, 3}, {0}}));
  EXPECT_EQ(report.witness->second, series({kZ6, {0, 2, 4}, {0}}));
  EXPECT_GT(report.pairsExamined, 0u);
}

TEST_F(SeriesTest, CompositionSeriesIsItsOwnCoarsestRefinement) {
  const auto s = series({kZ6, {0, 3}, {0}});
  EXPECT_TRUE(coarsestCheck(*form_, s, s).coarsest);
}

TEST(Series, CyclicFourRefinementIsCoarsest) {
  auto form = asGroupForm({builtinGroup("Z4")});
  const ObjectId g{0};
  const auto half = form->subobject(g, Elements{0, 2});
  const auto s = validateSeries(*form, g, {form->top(g), form->bottom(g)});
  const auto t = validateSeries(*form, g, {form->top(g), half, form->bottom(g)});
  const auto report = coarsestCheck(*form, s, t);
  EXPECT_TRUE(report.coarsest);
  EXPECT_FALSE(report.witness.has_value());
}

// Subnormal chains counted on element sets with conjugation normality.
std::size_t countSeriesBySubsets(const FiniteGroup& g) {
  const testing::SubsetLattice lat(g);
  const Elements bottom{0};
  std::function<std::size_t(const Elements&)> below = [&](const Elements& x) {
    if (x == bottom) return std::size_t{1};
    std::size_t n = 0;
    for (const auto& y : lat.all()) {
      if (y.size() < x.size() && lat.normalIn(y, x)) n += below(y);
    }
    return n;
  };
  Elements top(g.order());
  for (std::uint32_t e = 0; e < g.order(); ++e) top[e] = e;
  return below(top);
}

class SeriesProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(SeriesProperty, EnumerationMatchesSubsetCount) {
  const auto g = builtinGroup(GetParam());
  auto form = asGroupForm({g});
  const auto all = enumerateSeries(*form, ObjectId{0});
  EXPECT_EQ(all.size(), countSeriesBySubsets(g));
}

TEST_P(SeriesProperty, RefinementTheoremOnAllPairs) {
  const auto g = builtinGroup(GetParam());
  auto form = asGroupForm({g});
  const auto all = enumerateSeries(*form, ObjectId{0});
  for (const auto& s : all) {
    for (const auto& t : all) {
      const auto r = refinePair(*form, s, t);
      ASSERT_EQ(r.left.length(), r.right.length());
      EXPECT_TRUE(refines(r.left, s));
      EXPECT_TRUE(refines(r.right, t));
      const auto p = projectivelyIsomorphic(*form, r.left, r.right);
      ASSERT_TRUE(p.has_value());
      EXPECT_EQ(quotientTypeMultiset(*form, r.left),
                quotientTypeMultiset(*form, r.right));
      for (const auto& [a, b] : r.matching) {
        const auto x = r.left.step(a);
        const auto y = r.right.step(b);
        EXPECT_TRUE(projectsOnto(*form, x, y));
        EXPECT_TRUE(projectsOnto(*form, y, x));
        // Quotients built directly from the element sets.
        auto quotient = [&](Interval i) {
          const auto hi = realizeSubgroup(g, form->subgroup(i.hi));
          Elements lo;
          for (auto e : form->subgroup(i.lo).elements()) {
            lo.push_back(static_cast<std::uint32_t>(
                std::find(hi.inclusion.begin(), hi.inclusion.end(), e) -
                hi.inclusion.begin()));
          }
          std::sort(lo.begin(), lo.end());
          return quotientGroup(hi.group, SubgroupSet::fromElements(lo)).group;
        };
        EXPECT_TRUE(isomorphic(quotient(x), quotient(y)));
      }
    }
  }
}

TEST_P(SeriesProperty, JordanHolderMultisets) {
  auto form = asGroupForm({builtinGroup(GetParam())});
  std::vector<SubnormalSeries> composition;
  for (const auto& s : enumerateSeries(*form, ObjectId{0})) {
    if (isCompositionSeries(*form, s)) composition.push_back(s);
  }
  ASSERT_FALSE(composition.empty());
  const auto expected = quotientTypeMultiset(*form, composition.front());
  for (const auto& s : composition) {
    EXPECT_EQ(s.length(), composition.front().length());
    EXPECT_EQ(quotientTypeMultiset(*form, s), expected);
    for (const auto& label : quotientTypeMultiset(*form, s)) {
      EXPECT_TRUE(label == "Z2" || label == "Z3" || label == "Z5" ||
                  label == "Z7" || label == "Z11")
          << label;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallGroups, SeriesProperty,
                         ::testing::Values("Z6", "Z4", "S3", "D8", "Q8",
                                           "Z12", "A4"));

TEST(Series, EnumerationThroughAGivenSeries) {
  auto form = asGroupForm({builtinGroup("Z12")});
  const ObjectId g{0};
  const auto six = form->subobject(g, Elements{0, 2, 4, 6, 8, 10});
  const auto through =
      validateSeries(*form, g, {form->top(g), six, form->bottom(g)});
  const auto refinements = enumerateSeries(*form, g, &through);
  EXPECT_FALSE(refinements.empty());
  for (const auto& s : refinements) EXPECT_TRUE(refines(s, through));
  EXPECT_THROW(enumerateSeries(*form, g, nullptr, 2), BudgetError);
}

}  // namespace
}  // namespace noether
