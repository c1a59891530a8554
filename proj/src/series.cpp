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

#include "noether/series.hpp"

#include <algorithm>
#include <functional>

#include "noether/errors.hpp"
#include "noether/group_form.hpp"
#include "noether/isomorphism.hpp"
#include "noether/subfactor.hpp"

namespace noether {

namespace {

std::string stepName(const Form& form, std::size_t i, Interval step) {
  return "step " + std::to_string(i) + " [" + form.describe(step.lo) + ", " +
         form.describe(step.hi) + "]";
}

void requireSameObject(const SubnormalSeries& s, const SubnormalSeries& t) {
  if (s.object != t.object) {
    throw DomainError("series live on different objects " +
                      toString(s.object) + " and " + toString(t.object));
  }
}

std::vector<SubobjectRef> dedupe(const std::vector<SubobjectRef>& raw) {
  std::vector<SubobjectRef> out;
  for (const auto& x : raw) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

// Deduplicated step index of every non-degenerate raw step.
std::vector<std::optional<std::size_t>> stepIndex(
    const std::vector<SubobjectRef>& raw) {
  std::vector<std::optional<std::size_t>> out;
  std::size_t next = 0;
  for (std::size_t p = 0; p + 1 < raw.size(); ++p) {
    if (raw[p] == raw[p + 1]) {
      out.emplace_back();
    } else {
      out.emplace_back(next++);
    }
  }
  return out;
}

}  // namespace

SubnormalSeries validateSeries(const Form& form, ObjectId object,
                               std::vector<SubobjectRef> terms) {
  if (!form.contains(object)) {
    throw ValidationError("unknown object " + toString(object));
  }
  if (terms.empty()) throw ValidationError("series has no terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].object != object || terms[i].id >= form.fiberSize(object)) {
      throw ValidationError("term " + std::to_string(i) +
                            " is not a subobject of " + form.describe(object));
    }
  }
  if (terms.front() != form.top(object)) {
    throw ValidationError("series must start at the top " +
                          form.describe(form.top(object)));
  }
  if (terms.back() != form.bottom(object)) {
    throw ValidationError("series must end at the bottom " +
                          form.describe(form.bottom(object)));
  }
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    const Interval step{terms[i + 1], terms[i]};
    if (step.lo == step.hi) {
      throw ValidationError(stepName(form, i, step) + " repeats a term");
    }
    if (!form.leq(step.lo, step.hi)) {
      throw ValidationError(stepName(form, i, step) + " is not decreasing");
    }
    if (!isSubfactor(form, step)) {
      throw ValidationError(stepName(form, i, step) + " is not a subfactor");
    }
  }
  return {object, std::move(terms)};
}

bool refines(const SubnormalSeries& fine, const SubnormalSeries& coarse) {
  if (fine.object != coarse.object) return false;
  return std::all_of(coarse.terms.begin(), coarse.terms.end(), [&](auto x) {
    return std::find(fine.terms.begin(), fine.terms.end(), x) !=
           fine.terms.end();
  });
}

RefinementResult refinePair(const Form& form, const SubnormalSeries& s,
                            const SubnormalSeries& t) {
  requireSameObject(s, t);
  const auto n = s.length();
  const auto m = t.length();
  RefinementResult r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      r.rawLeft.push_back(project(form, t.terms[j], s.step(i)));
    }
  }
  r.rawLeft.push_back(s.terms.back());
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      r.rawRight.push_back(project(form, s.terms[i], t.step(j)));
    }
  }
  r.rawRight.push_back(t.terms.back());
  if (n == 0 || m == 0) {
    // A trivial object: both series are the single term.
    r.rawLeft = s.terms;
    r.rawRight = t.terms;
  }

  const auto bottom = form.bottom(s.object);
  for (const auto* raw : {&r.rawLeft, &r.rawRight}) {
    for (const auto x : *raw) {
      if (x != bottom && !form.normality(x).isConormal) {
        throw ProvisoError("projection " + form.describe(x) +
                           " is not conormal");
      }
    }
  }

  try {
    r.left = validateSeries(form, s.object, dedupe(r.rawLeft));
    r.right = validateSeries(form, t.object, dedupe(r.rawRight));
  } catch (const ValidationError& e) {
    throw InstanceIntegrityError(std::string("refined series is invalid: ") +
                                 e.what());
  }

  const auto leftIndex = stepIndex(r.rawLeft);
  const auto rightIndex = stepIndex(r.rawRight);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // [Y^i_(j+1), Y^i_j] sits at raw position i*m + j on the left and
      // [X^j_(i+1), X^j_i] at j*n + i on the right.
      const auto& a = leftIndex[i * m + j];
      const auto& b = rightIndex[j * n + i];
      if (a.has_value() != b.has_value()) {
        throw InstanceIntegrityError(
            "refinement pairs a trivial step with a non-trivial one");
      }
      if (a) r.matching.emplace_back(*a, *b);
    }
  }
  return r;
}

std::optional<ProjectiveIsomorphism> projectivelyIsomorphic(
    const Form& form, const SubnormalSeries& s, const SubnormalSeries& t) {
  requireSameObject(s, t);
  const auto n = s.length();
  if (n != t.length()) return std::nullopt;
  std::vector<std::vector<std::size_t>> targets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (projectsOnto(form, s.step(i), t.step(j)) &&
          projectsOnto(form, t.step(j), s.step(i))) {
        targets[i].push_back(j);
      }
    }
    if (targets[i].empty()) return std::nullopt;
  }
  // Bipartite matching by augmenting paths.
  std::vector<std::optional<std::size_t>> owner(n);
  std::function<bool(std::size_t, std::vector<char>&)> augment =
      [&](std::size_t i, std::vector<char>& seen) {
        for (auto j : targets[i]) {
          if (seen[j]) continue;
          seen[j] = 1;
          if (!owner[j] || augment(*owner[j], seen)) {
            owner[j] = i;
            return true;
          }
        }
        return false;
      };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> seen(n, 0);
    if (!augment(i, seen)) return std::nullopt;
  }
  ProjectiveIsomorphism iso;
  for (std::size_t j = 0; j < n; ++j) iso.pairs.emplace_back(*owner[j], j);
  std::sort(iso.pairs.begin(), iso.pairs.end());
  return iso;
}

std::vector<std::string> quotientTypeMultiset(const Form& form,
                                              const SubnormalSeries& s) {
  const auto* groups = dynamic_cast<const GroupForm*>(&form);
  if (!groups) {
    throw UnsupportedError("quotient types need the group instance");
  }
  const auto& g = groups->group(s.object);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < s.length(); ++i) {
    const auto step = s.step(i);
    const auto hi = realizeSubgroup(g, groups->subgroup(step.hi));
    const auto& lo = groups->subgroup(step.lo);
    ElementBits inHi;
    for (std::uint32_t k = 0; k < hi.inclusion.size(); ++k) {
      if (lo.contains(hi.inclusion[k])) inHi.set(k);
    }
    labels.push_back(
        identifyGroup(quotientGroup(hi.group, SubgroupSet(inHi)).group));
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<SubnormalSeries> enumerateSeries(const Form& form, ObjectId object,
                                             const SubnormalSeries* through,
                                             std::size_t limit) {
  const auto fiber = fiberLattice(form, object).elements();
  const auto bottom = form.bottom(object);
  std::vector<SubnormalSeries> out;
  std::vector<SubobjectRef> chain{form.top(object)};

  // Largest term of `through` strictly below c.
  auto nextRequired = [&](SubobjectRef c) -> std::optional<SubobjectRef> {
    if (!through) return std::nullopt;
    for (const auto x : through->terms) {
      if (x != c && form.leq(x, c)) return x;
    }
    return std::nullopt;
  };

  std::function<void()> extend = [&] {
    const auto c = chain.back();
    if (c == bottom) {
      if (out.size() >= limit) {
        throw BudgetError("more than " + std::to_string(limit) + " series");
      }
      out.push_back({object, chain});
      return;
    }
    const auto required = nextRequired(c);
    for (const auto d : fiber) {
      if (d == c || !form.leq(d, c)) continue;
      if (required && !form.leq(*required, d)) continue;
      if (!isSubfactor(form, {d, c})) continue;
      chain.push_back(d);
      extend();
      chain.pop_back();
    }
  };
  extend();
  return out;
}

bool isCompositionSeries(const Form& form, const SubnormalSeries& s) {
  const auto fiber = fiberLattice(form, s.object).elements();
  for (std::size_t i = 0; i < s.length(); ++i) {
    const auto step = s.step(i);
    for (const auto z : fiber) {
      if (z == step.lo || z == step.hi) continue;
      if (!form.leq(step.lo, z) || !form.leq(z, step.hi)) continue;
      if (isSubfactor(form, {step.lo, z}) && isSubfactor(form, {z, step.hi})) {
        return false;
      }
    }
  }
  return true;
}

E1Verdict e1Check(const Form& form, const SubnormalSeries& s,
                  const SubnormalSeries& t, Interval candidate, std::size_t i,
                  std::size_t j) {
  requireSameObject(s, t);
  if (i >= s.length() || j >= t.length()) {
    throw DomainError("step index out of range");
  }
  const auto stepS = s.step(i);
  const auto stepT = t.step(j);
  if (!isSubfactor(form, candidate) ||
      !intervalWithin(form, candidate, stepS)) {
    throw DomainError("candidate is not a subfactor inside " +
                      stepName(form, i, stepS));
  }
  std::optional<Interval> witness;
  const auto fiber = fiberLattice(form, s.object).elements();
  for (const auto a : fiber) {
    for (const auto b : fiber) {
      const Interval w{a, b};
      if (witness || !form.leq(a, b) || !intervalWithin(form, w, stepT)) {
        continue;
      }
      if (isSubfactor(form, w) && projectsOnto(form, w, candidate)) {
        witness = w;
      }
    }
  }
  if (!witness) {
    throw DomainError("no subfactor inside " + stepName(form, j, stepT) +
                      " projects onto the candidate");
  }
  E1Verdict v;
  v.projection = projectInterval(form, stepT, stepS);
  v.contained = intervalWithin(form, candidate, v.projection);
  v.witness = *witness;
  return v;
}

CoarsestReport coarsestCheck(const Form& form, const SubnormalSeries& s,
                             const SubnormalSeries& t) {
  requireSameObject(s, t);
  if (form.fiberSize(s.object) > kMaxCoarsestFiber) {
    throw BudgetError("fiber of " + form.describe(s.object) + " has " +
                      std::to_string(form.fiberSize(s.object)) +
                      " elements; exhaustive search is limited to " +
                      std::to_string(kMaxCoarsestFiber));
  }
  CoarsestReport report;
  report.refinement = refinePair(form, s, t);
  const auto lefts = enumerateSeries(form, s.object, &s);
  const auto rights = enumerateSeries(form, t.object, &t);
  for (const auto& a : lefts) {
    for (const auto& b : rights) {
      if (!projectivelyIsomorphic(form, a, b)) continue;
      ++report.pairsExamined;
      if (refines(a, report.refinement.left) &&
          refines(b, report.refinement.right)) {
        continue;
      }
      if (report.coarsest) {
        report.coarsest = false;
        report.witness.emplace(a, b);
      }
    }
  }
  return report;
}

}  // namespace noether
