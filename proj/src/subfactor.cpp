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

#include "noether/subfactor.hpp"

#include "noether/errors.hpp"

namespace noether {

namespace {

void requireSubfactor(const Form& form, Interval x) {
  if (!isSubfactor(form, x)) {
    throw DomainError("[" + form.describe(x.lo) + ", " + form.describe(x.hi) +
                      "] is not a subfactor");
  }
}

}  // namespace

SubobjectRef project(const Form& form, SubobjectRef z, Interval x) {
  requireSameFiber(x.lo, x.hi);
  requireSameFiber(z, x.lo);
  return form.join(form.meet(z, x.hi), x.lo);
}

Interval projectInterval(const Form& form, Interval y, Interval x) {
  return {project(form, y.lo, x), project(form, y.hi, x)};
}

bool isSubfactor(const Form& form, Interval x) {
  return relativeNormal(form, x.lo, x.hi);
}

bool projectsOnto(const Form& form, Interval y, Interval x) {
  return projectInterval(form, y, x) == x;
}

bool intervalWithin(const Form& form, Interval inner, Interval outer) {
  requireSameFiber(inner.lo, outer.lo);
  return form.leq(outer.lo, inner.lo) && form.leq(inner.hi, outer.hi);
}

ProjectionLemmaVerdict subfactorProjectionCheck(const Form& form, Interval x,
                                                Interval y) {
  requireSubfactor(form, x);
  ProjectionLemmaVerdict v;
  v.yx = projectInterval(form, y, x);
  v.yxThenY = projectInterval(form, v.yx, y);
  v.xy = projectInterval(form, x, y);
  v.identityHolds = v.yxThenY == v.xy;
  v.topConormal = form.normality(v.yx.hi).isConormal;
  if (v.topConormal && isSubfactor(form, y)) {
    v.yxSubfactor = isSubfactor(form, v.yx);
  }
  return v;
}

Zigzag subfactorZigzag(const Form& form, Interval x, Interval y) {
  return canonicalZigzag(form, x).reversed().concat(canonicalZigzag(form, y));
}

TheoremAVerdict theoremAEquivalence(const Form& form, Interval x, Interval y) {
  requireSubfactor(form, x);
  requireSubfactor(form, y);
  TheoremAVerdict v{subfactorZigzag(form, x, y), false, false};
  v.inducesIso = inducesIso(form, v.zigzag);
  v.mutuallyProjecting =
      projectInterval(form, x, y) == y && projectInterval(form, y, x) == x;
  return v;
}

bool ButterflyReport::ok() const {
  if (!yxOntoXy || !xyOntoYx) return false;
  if (conormalOK.first && conormalOK.second) {
    return subfactorsOK.first && subfactorsOK.second && isoInduced;
  }
  return true;
}

ButterflyReport butterfly(const Form& form, Interval x, Interval y) {
  requireSubfactor(form, x);
  requireSubfactor(form, y);
  ButterflyReport r;
  r.x = x;
  r.y = y;
  r.yx = projectInterval(form, y, x);
  r.xy = projectInterval(form, x, y);
  r.yxOntoXy = projectInterval(form, r.yx, r.xy) == r.xy;
  r.xyOntoYx = projectInterval(form, r.xy, r.yx) == r.yx;
  r.conormalOK = {form.normality(r.yx.hi).isConormal,
                  form.normality(r.xy.hi).isConormal};
  r.subfactorsOK = {isSubfactor(form, r.yx), isSubfactor(form, r.xy)};
  if (r.subfactorsOK.first && r.subfactorsOK.second) {
    r.isoZigzag = subfactorZigzag(form, r.yx, r.xy);
    r.isoInduced = inducesIso(form, *r.isoZigzag);
    if (r.isoInduced) {
      if (const auto induced = inducesHom(form, *r.isoZigzag)) {
        r.isoWitness = induced->hom;
      }
    }
  }
  return r;
}

}  // namespace noether
