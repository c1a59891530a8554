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
#include <utility>

#include "noether/form.hpp"
#include "noether/zigzag.hpp"

namespace noether {

/// Projection of z into the interval x: (z ^ x.hi) v x.lo.
SubobjectRef project(const Form& form, SubobjectRef z, Interval x);
/// Endpoint-wise projection of y into x; always contained in x.
Interval projectInterval(const Form& form, Interval y, Interval x);

/// x.lo <= x.hi and x.lo is normal to x.hi.
bool isSubfactor(const Form& form, Interval x);
/// y projects onto x when projecting y into x gives back all of x.
bool projectsOnto(const Form& form, Interval y, Interval x);

/// Interval containment [a, b] within [c, d]: c <= a and b <= d.
bool intervalWithin(const Form& form, Interval inner, Interval outer);

struct ProjectionLemmaVerdict {
  Interval yx;
  Interval yxThenY;  // (YX)Y
  Interval xy;
  /// (YX)Y = XY
  bool identityHolds = false;
  /// Y+X is conormal
  bool topConormal = false;
  /// YX is a subfactor; checked only when topConormal and y is itself a
  /// subfactor. For a bare interval y it can fail: in S3 with x = [0, G]
  /// and y = [<s>, G], YX = y.
  std::optional<bool> yxSubfactor;

  bool ok() const { return identityHolds && yxSubfactor.value_or(true); }
};

/// Throws DomainError unless x is a subfactor.
ProjectionLemmaVerdict subfactorProjectionCheck(const Form& form, Interval x,
                                                Interval y);

/// X+/X- <- X+ -> G <- Y+ -> Y+/Y- for subfactors x and y.
Zigzag subfactorZigzag(const Form& form, Interval x, Interval y);

struct TheoremAVerdict {
  Zigzag zigzag;
  bool inducesIso = false;
  /// XY = Y and YX = X
  bool mutuallyProjecting = false;

  bool agrees() const { return inducesIso == mutuallyProjecting; }
};

/// Throws DomainError unless both intervals are subfactors.
TheoremAVerdict theoremAEquivalence(const Form& form, Interval x, Interval y);

struct ButterflyReport {
  Interval x;
  Interval y;
  Interval yx;
  Interval xy;
  /// (YX)(XY) = XY
  bool yxOntoXy = false;
  /// (XY)(YX) = YX
  bool xyOntoYx = false;
  /// Y+X and X+Y are conormal.
  std::pair<bool, bool> conormalOK{false, false};
  /// YX and XY are subfactors.
  std::pair<bool, bool> subfactorsOK{false, false};
  /// Zigzag between the quotients of YX and XY; needs both subfactors.
  std::optional<Zigzag> isoZigzag;
  bool isoInduced = false;
  /// Concrete isomorphism when the instance can build one.
  std::optional<MorphismRef> isoWitness;

  /// The identities hold and, under the conormality proviso, an
  /// isomorphism is induced.
  bool ok() const;
};

/// Throws DomainError unless both intervals are subfactors.
ButterflyReport butterfly(const Form& form, Interval x, Interval y);

}  // namespace noether
