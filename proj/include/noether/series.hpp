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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noether/form.hpp"

namespace noether {

/// top = X0 > X1 > ... > Xn = bottom, each step [X(i+1), Xi] a subfactor.
struct SubnormalSeries {
  ObjectId object;
  std::vector<SubobjectRef> terms;

  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
  /// [X(i+1), Xi]
  Interval step(std::size_t i) const { return {terms.at(i + 1), terms.at(i)}; }

  friend bool operator==(const SubnormalSeries&,
                         const SubnormalSeries&) = default;
};

/// Throws ValidationError naming the offending step.
SubnormalSeries validateSeries(const Form& form, ObjectId object,
                               std::vector<SubobjectRef> terms);

/// Every term of `coarse` occurs in `fine`.
bool refines(const SubnormalSeries& fine, const SubnormalSeries& coarse);

struct RefinementResult {
  SubnormalSeries left;
  SubnormalSeries right;
  /// Projections of every term of the other series into every step,
  /// duplicates kept.
  std::vector<SubobjectRef> rawLeft;
  std::vector<SubobjectRef> rawRight;
  /// (step of left, step of right) pairs that project onto each other.
  std::vector<std::pair<std::size_t, std::size_t>> matching;
};

/// Refines both series by projecting the terms of each into the steps of
/// the other. Throws ProvisoError when a projection other than the bottom is
/// not conormal, DomainError when the series live on different objects.
RefinementResult refinePair(const Form& form, const SubnormalSeries& s,
                            const SubnormalSeries& t);

struct ProjectiveIsomorphism {
  /// (step of the first series, step of the second series)
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Bijection between the steps under which matched steps project onto each
/// other; nullopt when none exists (in particular for different lengths).
std::optional<ProjectiveIsomorphism> projectivelyIsomorphic(
    const Form& form, const SubnormalSeries& s, const SubnormalSeries& t);

/// Sorted isomorphism-class labels of the step quotients. Throws
/// UnsupportedError outside the group instance.
std::vector<std::string> quotientTypeMultiset(const Form& form,
                                              const SubnormalSeries& s);

/// All series of the object, optionally only those refining `through`.
/// Throws BudgetError after `limit` series.
std::vector<SubnormalSeries> enumerateSeries(
    const Form& form, ObjectId object,
    const SubnormalSeries* through = nullptr, std::size_t limit = 100000);

/// No step admits an intermediate term that keeps both halves subfactors.
bool isCompositionSeries(const Form& form, const SubnormalSeries& s);

struct E1Verdict {
  /// Candidate lies inside the projection of the t-step into the s-step.
  bool contained = false;
  /// [Y(j+1), Yj][X(i+1), Xi]
  Interval projection;
  /// Subfactor inside the t-step projecting onto the candidate.
  Interval witness;
};

/// Tests the containment of a candidate subfactor of step i of s in the
/// projection of step j of t into it. Throws DomainError unless the
/// candidate is a subfactor inside step i onto which some subfactor inside
/// step j projects.
E1Verdict e1Check(const Form& form, const SubnormalSeries& s,
                  const SubnormalSeries& t, Interval candidate, std::size_t i,
                  std::size_t j);

inline constexpr std::size_t kMaxCoarsestFiber = 20;

struct CoarsestReport {
  RefinementResult refinement;
  /// Every projectively isomorphic pair of refinements of (s, t) refines
  /// the output of refinePair.
  bool coarsest = true;
  /// First pair found that does not.
  std::optional<std::pair<SubnormalSeries, SubnormalSeries>> witness;
  std::size_t pairsExamined = 0;
};

/// Exhaustive over refinements; throws BudgetError on fibers with more than
/// kMaxCoarsestFiber elements.
CoarsestReport coarsestCheck(const Form& form, const SubnormalSeries& s,
                             const SubnormalSeries& t);

}  // namespace noether
