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

// Acceptance gate. Runs each criterion, prints one PASS/FAIL line per
// criterion and exits nonzero if any fails.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "noether/builtins.hpp"
#include "noether/errors.hpp"
#include "noether/group_form.hpp"
#include "noether/isomorphism.hpp"
#include "noether/lattice.hpp"
#include "noether/lattice_form.hpp"
#include "noether/series.hpp"
#include "noether/subfactor.hpp"
#include "noether/verifier.hpp"
#include "noether/zigzag.hpp"
#include "test_support.hpp"

namespace noether {
namespace {

using testing::Elements;

struct Verdict {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok && firstFailure_.empty()) firstFailure_ = what;
    failed_ += !ok;
  }
  Verdict verdict(const std::string& summary) const {
    std::ostringstream out;
    out << summary << "; " << checked_ << " checks";
    if (failed_) out << ", " << failed_ << " failed, first: " << firstFailure_;
    return {failed_ == 0 && checked_ > 0, out.str()};
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::string firstFailure_;
};

std::vector<FiniteGroup> namedGroups(std::initializer_list<const char*> names) {
  std::vector<FiniteGroup> out;
  for (const auto* n : names) out.push_back(builtinGroup(n));
  return out;
}

std::vector<FiniteGroup> corpus(std::size_t maxOrder) {
  return catalogueUpTo(maxOrder);
}

void expectSuites(Tally& t, const Form& form, const std::string& label) {
  for (const auto& report : {verifyAxioms(form), verifyTheorems(form)}) {
    for (const auto& c : report.checks) {
      t.expect(c.status == CheckStatus::kPass,
               label + " " + c.name + " " + toString(c.status) + " " +
                   c.witness);
    }
  }
}

std::string show(const GroupForm& f, Interval i) {
  return "[" + f.describe(i.lo) + ", " + f.describe(i.hi) + "]";
}

struct Intervals {
  std::vector<Interval> all;
  std::vector<Interval> subfactors;
};

Intervals intervalsOf(const GroupForm& form, ObjectId g) {
  Intervals out;
  const auto fiber = fiberLattice(form, g).elements();
  for (const auto& lo : fiber) {
    for (const auto& hi : fiber) {
      if (!form.leq(lo, hi)) continue;
      out.all.push_back({lo, hi});
      if (isSubfactor(form, {lo, hi})) out.subfactors.push_back({lo, hi});
    }
  }
  return out;
}

// 1. Axiom and theorem suites on the group form.
Verdict axiomConformance() {
  const auto start = std::chrono::steady_clock::now();
  auto form = asGroupForm(
      namedGroups({"Z6", "Z4", "V4", "S3", "D8", "Q8", "Z12"}));
  Tally t;
  expectSuites(t, *form, "group form");
  const auto seconds = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  t.expect(seconds < 60, "runtime " + std::to_string(seconds) + " s");
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << "Z6 Z4 V4 S3 D8 Q8 Z12 in " << seconds << " s";
  return t.verdict(s.str());
}

// 2. The dual form passes the same suites and double duals agree.
Verdict duality() {
  auto inner = asGroupForm(
      namedGroups({"Z6", "Z4", "V4", "S3", "D8", "Q8", "Z12"}));
  // Register a few extra homomorphisms so the queries span several objects.
  inner->registerHom(ObjectId{0}, ObjectId{0}, {0, 2, 4, 0, 2, 4});
  inner->registerHom(ObjectId{6}, ObjectId{1}, {0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3});
  const auto dual = dualize(inner);
  Tally t;
  expectSuites(t, *dual, "dual");

  const auto twice = dualize(dual);
  const auto objects = inner->objects();
  const auto homs = inner->registeredMorphisms();
  std::mt19937_64 rng(20260101);
  auto pick = [&](ObjectId o) {
    return SubobjectRef{o, std::uint32_t(rng() % inner->fiberSize(o))};
  };
  std::size_t matches = 0;
  for (int q = 0; q < 1000; ++q) {
    const auto o = objects[rng() % objects.size()];
    const auto a = pick(o);
    const auto b = pick(o);
    const auto f = homs[rng() % homs.size()];
    bool same = false;
    switch (q % 6) {
      case 0: same = twice->leq(a, b) == inner->leq(a, b); break;
      case 1:
        same = twice->meet(a, b) == inner->meet(a, b) &&
               twice->join(a, b) == inner->join(a, b);
        break;
      case 2: {
        const auto x = pick(f.domain);
        same = twice->directImage(f, x) == inner->directImage(f, x);
        break;
      }
      case 3: {
        const auto y = pick(f.codomain);
        same = twice->inverseImage(f, y) == inner->inverseImage(f, y);
        break;
      }
      case 4:
        same = twice->normality(a) == inner->normality(a) &&
               twice->embedding(a) == inner->embedding(a) &&
               twice->projection(a) == inner->projection(a);
        break;
      default: same = twice->factorize(f) == inner->factorize(f); break;
    }
    matches += same;
    t.expect(same, "double dual query " + std::to_string(q));
  }
  return t.verdict("dual suites plus " + std::to_string(matches) +
                   "/1000 double-dual queries equal");
}

// 3. (YX)Y = XY for every subfactor X and interval Y, checked against
// element-set arithmetic as well.
Verdict projectionLemma() {
  Tally t;
  std::size_t pairs = 0;
  const auto groups = corpus(12);
  for (const auto& g : groups) {
    auto form = asGroupForm({g});
    const ObjectId o{0};
    const testing::SubsetLattice oracle(form->group(o));
    auto els = [&](SubobjectRef x) { return form->subgroup(x).elements(); };
    const auto iv = intervalsOf(*form, o);
    for (const auto& x : iv.subfactors) {
      for (const auto& y : iv.all) {
        ++pairs;
        const auto v = subfactorProjectionCheck(*form, x, y);
        const auto yxLo = oracle.project(els(y.lo), els(x.lo), els(x.hi));
        const auto yxHi = oracle.project(els(y.hi), els(x.lo), els(x.hi));
        const auto lhsLo = oracle.project(yxLo, els(y.lo), els(y.hi));
        const auto lhsHi = oracle.project(yxHi, els(y.lo), els(y.hi));
        const auto rhsLo = oracle.project(els(x.lo), els(y.lo), els(y.hi));
        const auto rhsHi = oracle.project(els(x.hi), els(y.lo), els(y.hi));
        const auto where = g.name() + " X=" + show(*form, x) +
                           " Y=" + show(*form, y);
        t.expect(v.identityHolds, where);
        t.expect(lhsLo == rhsLo && lhsHi == rhsHi, "oracle " + where);
        t.expect(els(v.xy.lo) == rhsLo && els(v.xy.hi) == rhsHi,
                 "oracle agreement " + where);
      }
    }
  }
  return t.verdict(std::to_string(groups.size()) + " groups, " +
                   std::to_string(pairs) + " pairs");
}

// 4. Butterfly identities and the induced isomorphism, cross-checked by
// isomorphism search.
Verdict butterflyLemma() {
  Tally t;
  std::size_t pairs = 0;
  std::size_t agreements = 0;
  for (const auto& g : corpus(12)) {
    auto form = asGroupForm({g});
    const auto iv = intervalsOf(*form, ObjectId{0});
    for (const auto& x : iv.subfactors) {
      for (const auto& y : iv.subfactors) {
        ++pairs;
        const auto where = g.name() + " X=" + show(*form, x) +
                           " Y=" + show(*form, y);
        const auto r = butterfly(*form, x, y);
        t.expect(r.yxOntoXy && r.xyOntoYx, "identities " + where);
        t.expect(r.ok(), "report " + where);
        bool induced = false;
        if (r.isoWitness) {
          const auto map = form->elementMap(*r.isoWitness);
          const auto& dom = form->group(r.isoWitness->domain);
          const auto& cod = form->group(r.isoWitness->codomain);
          const std::set<std::uint32_t> hit(map.begin(), map.end());
          induced = isHomomorphism(dom, cod, map) && hit.size() == cod.order() &&
                    map.size() == cod.order();
        }
        t.expect(induced, "bijective hom " + where);
        // Quotients of the two projected pieces built straight from elements.
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
        const bool searched =
            findIsomorphism(quotient(r.yx), quotient(r.xy)).has_value();
        t.expect(searched == induced, "search disagrees " + where);
        agreements += searched == induced;
      }
    }
  }
  return t.verdict(std::to_string(pairs) + " subfactor pairs, " +
                   std::to_string(agreements) + " agree with search");
}

// 5. The butterfly zigzag induces an isomorphism exactly when the two
// subfactors project onto each other.
Verdict theoremA() {
  Tally t;
  std::size_t pairs = 0;
  std::size_t positive = 0;
  for (const auto& g : corpus(12)) {
    auto form = asGroupForm({g});
    const auto iv = intervalsOf(*form, ObjectId{0});
    for (const auto& x : iv.subfactors) {
      for (const auto& y : iv.subfactors) {
        ++pairs;
        const auto v = theoremAEquivalence(*form, x, y);
        const bool mutual = projectInterval(*form, x, y) == y &&
                            projectInterval(*form, y, x) == x;
        positive += mutual;
        t.expect(v.agrees() && v.mutuallyProjecting == mutual,
                 g.name() + " X=" + show(*form, x) + " Y=" + show(*form, y));
      }
    }
  }
  return t.verdict(std::to_string(pairs) + " pairs, " +
                   std::to_string(positive) + " inducing isomorphisms");
}

// 6. Chase criterion against the element-level relational composite.
Verdict inductionCriterion() {
  Tally t;
  std::size_t zigzags = 0;
  std::size_t induced = 0;
  for (const auto& g : corpus(8)) {
    auto form = asGroupForm({g});
    testing::forEachZigzag(*form, Zigzag(ObjectId{0}), 4, [&](const Zigzag& z) {
      ++zigzags;
      const auto rel = testing::compositeByElements(*form, z);
      const bool functional = testing::isFunctional(rel);
      const auto h = inducesHom(*form, z);
      induced += h.has_value();
      bool agree = h.has_value() == functional;
      if (agree && h) {
        agree = h->hom.has_value() && h->imagesMatchChase;
        if (agree) {
          const auto map = form->elementMap(*h->hom);
          for (std::uint32_t a = 0; a < rel.size(); ++a) {
            agree = agree && map[a] == *rel[a].begin();
          }
        }
      }
      t.expect(agree, g.name() + " zigzag of " + std::to_string(z.size()) +
                          " legs ending at " + form->describe(z.end()));
    });
  }
  return t.verdict(std::to_string(zigzags) + " zigzags, " +
                   std::to_string(induced) + " inducing homomorphisms");
}

// 7. The diamond counterexample, value by value.
Verdict counterexample() {
  Tally t;
  auto form = asGroupForm({builtinGroup("Z6")});
  const ObjectId g{0};
  auto sub = [&](const Elements& e) { return form->subobject(g, e); };
  const Elements all{0, 1, 2, 3, 4, 5};
  const auto x = validateSeries(*form, g, {sub(all), sub({0})});
  const auto y = validateSeries(*form, g, {sub(all), sub({0, 2, 4}), sub({0})});
  const Interval y21{sub({0}), sub({0, 2, 4})};
  t.expect(projectInterval(*form, y21, {sub({0, 3}), sub(all)}) ==
               Interval{sub({0, 3}), sub(all)},
           "[Y2,Y1] on [{0,3},Z6]");
  t.expect(projectInterval(*form, y21, {sub({0}), sub(all)}) ==
               Interval{sub({0}), sub({0, 2, 4})},
           "[Y2,Y1] on [{0},Z6]");
  const auto e1 = e1Check(*form, x, y, {sub({0, 3}), sub(all)}, 0, 1);
  t.expect(!e1.contained, "e1Check returned true");
  const auto c = coarsestCheck(*form, x, y);
  t.expect(!c.coarsest, "coarsestCheck reported coarsest");
  t.expect(c.witness.has_value() &&
               c.witness->first ==
                   validateSeries(*form, g, {sub(all), sub({0, 3}), sub({0})}) &&
               c.witness->second == y,
           "coarser witness pair");
  std::ostringstream out;
  std::ostringstream err;
  t.expect(cli::run({"counterexample"}, out, err) == cli::kOk,
           "noether counterexample exit code");
  return t.verdict("projections, e1Check, coarsestCheck and the CLI");
}

// 8. Refinement theorem on all pairs of series, Jordan-Holder on all pairs
// of composition series.
Verdict refinementTheorem() {
  Tally t;
  std::size_t pairs = 0;
  std::size_t composition = 0;
  for (const auto& g : corpus(12)) {
    auto form = asGroupForm({g});
    const ObjectId o{0};
    const auto all = enumerateSeries(*form, o);
    for (const auto& s : all) {
      for (const auto& u : all) {
        ++pairs;
        const auto where = g.name() + " pair " + std::to_string(pairs);
        try {
          const auto r = refinePair(*form, s, u);
          validateSeries(*form, o, r.left.terms);
          validateSeries(*form, o, r.right.terms);
          t.expect(r.left.length() == r.right.length(), "lengths " + where);
          t.expect(refines(r.left, s) && refines(r.right, u),
                   "refines " + where);
          t.expect(projectivelyIsomorphic(*form, r.left, r.right).has_value(),
                   "matching " + where);
          t.expect(quotientTypeMultiset(*form, r.left) ==
                       quotientTypeMultiset(*form, r.right),
                   "multisets " + where);
        } catch (const Error& e) {
          t.expect(false, where + ": " + e.what());
        }
      }
    }
    std::vector<SubnormalSeries> comp;
    for (const auto& s : all) {
      if (isCompositionSeries(*form, s)) comp.push_back(s);
    }
    composition += comp.size();
    t.expect(!comp.empty(), g.name() + " has no composition series");
    for (const auto& s : comp) {
      t.expect(quotientTypeMultiset(*form, s) ==
                   quotientTypeMultiset(*form, comp.front()),
               "Jordan-Holder " + g.name());
    }
  }
  return t.verdict(std::to_string(pairs) + " series pairs, " +
                   std::to_string(composition) + " composition series");
}

// 9. Lattice instance: the Z6 diamond and random modular lattices pass;
// the pentagon is rejected with a witness.
Verdict latticeInstance() {
  Tally t;
  std::vector<FiniteLattice> lattices{subgroupLattice(builtinGroup("Z6"))};
  std::mt19937_64 rng(9);
  std::string sizes = std::to_string(lattices[0].size());
  for (int i = 0; i < 3; ++i) {
    lattices.push_back(randomModularLattice(rng, 12));
    sizes += " " + std::to_string(lattices.back().size());
    t.expect(lattices.back().size() <= 12, "random lattice too large");
  }
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    const auto form = asLatticeForm({lattices[i]});
    expectSuites(t, *form, "lattice " + std::to_string(i));
  }
  bool rejected = false;
  try {
    FiniteLattice::fromCovers(5, pentagonCovers());
  } catch (const ValidationError& e) {
    rejected = std::string(e.what()).find("witness") != std::string::npos;
  }
  t.expect(rejected, "pentagon accepted or rejected without witness");
  return t.verdict("lattice sizes " + sizes + "; pentagon rejected");
}

}  // namespace
}  // namespace noether

int main() {
  using noether::Verdict;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"axiom conformance", noether::axiomConformance},
      {"duality", noether::duality},
      {"subfactor projection lemma", noether::projectionLemma},
      {"butterfly", noether::butterflyLemma},
      {"zigzag isomorphism criterion", noether::theoremA},
      {"homomorphism induction", noether::inductionCriterion},
      {"diamond counterexample", noether::counterexample},
      {"refinement theorem", noether::refinementTheorem},
      {"modular lattice instance", noether::latticeInstance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". "
              << criteria[i].first << ": " << v.detail << std::endl;
  }
  std::cout << (failures ? "acceptance FAILED" : "acceptance passed") << " ("
            << criteria.size() - failures << "/" << criteria.size() << ")"
            << std::endl;
  return failures ? 1 : 0;
}
