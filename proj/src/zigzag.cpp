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

#include "noether/zigzag.hpp"

#include <algorithm>

#include "noether/errors.hpp"
#include "noether/subfactor.hpp"

namespace noether {

Zigzag::Zigzag(ObjectId start, const std::vector<ZigzagLeg>& legs)
    : nodes_{start} {
  for (const auto& leg : legs) append(leg);
}

Zigzag& Zigzag::append(ZigzagLeg leg) {
  const bool rightward = leg.direction == LegDirection::kRightward;
  const auto source = rightward ? leg.hom.domain : leg.hom.codomain;
  if (source != end()) {
    throw DomainError("leg " + toString(leg.hom) + " does not start at " +
                      toString(end()));
  }
  legs_.push_back(leg);
  nodes_.push_back(rightward ? leg.hom.codomain : leg.hom.domain);
  return *this;
}

Zigzag Zigzag::reversed() const {
  Zigzag out(end());
  for (auto it = legs_.rbegin(); it != legs_.rend(); ++it) {
    out.append(it->hom, it->direction == LegDirection::kRightward
                            ? LegDirection::kLeftward
                            : LegDirection::kRightward);
  }
  return out;
}

Zigzag Zigzag::concat(const Zigzag& next) const {
  if (next.start() != end()) {
    throw DomainError("cannot join zigzags: " + toString(end()) + " vs " +
                      toString(next.start()));
  }
  Zigzag out = *this;
  for (const auto& leg : next.legs_) out.append(leg);
  return out;
}

SubobjectRef chase(const Form& form, const Zigzag& z, SubobjectRef x,
                   ChaseDirection direction) {
  if (direction == ChaseDirection::kBackward) {
    return chase(form, z.reversed(), x, ChaseDirection::kForward);
  }
  if (x.object != z.start()) {
    throw DomainError(toString(x) + " is not in the fiber of the start node " +
                      toString(z.start()));
  }
  for (const auto& leg : z.legs()) {
    x = leg.direction == LegDirection::kRightward
            ? form.directImage(leg.hom, x)
            : form.inverseImage(leg.hom, x);
  }
  return x;
}

Interval chase(const Form& form, const Zigzag& z, Interval x,
               ChaseDirection direction) {
  return {chase(form, z, x.lo, direction), chase(form, z, x.hi, direction)};
}

Zigzag canonicalZigzag(const Form& form, Interval subfactor) {
  if (!isSubfactor(form, subfactor)) {
    throw DomainError("[" + form.describe(subfactor.lo) + ", " +
                      form.describe(subfactor.hi) + "] is not a subfactor");
  }
  const auto iota = form.embedding(subfactor.hi);
  if (!iota) {
    throw InstanceIntegrityError("conormal " + form.describe(subfactor.hi) +
                                 " has no embedding");
  }
  const auto pulled = form.inverseImage(*iota, subfactor.lo);
  const auto pi = form.projection(pulled);
  if (!pi) {
    throw InstanceIntegrityError("normal " + form.describe(pulled) +
                                 " has no projection");
  }
  Zigzag z(subfactor.hi.object);
  z.append(*iota, LegDirection::kLeftward);
  z.append(*pi, LegDirection::kRightward);
  return z;
}

std::optional<InducedHom> inducesHom(const Form& form, const Zigzag& z) {
  const auto first = z.start();
  const auto last = z.end();
  if (chase(form, z, form.bottom(first)) != form.bottom(last) ||
      chase(form, z, form.top(last), ChaseDirection::kBackward) !=
          form.top(first)) {
    return std::nullopt;
  }
  InducedHom out{z, std::nullopt, std::nullopt, true};
  if (const auto* view = form.elementView()) {
    out.relation = relationalComposite(*view, first, z.legs());
  }
  out.hom = form.realizeInduced(first, last, z.legs());
  if (out.hom) {
    for (const auto x : fiberLattice(form, first).elements()) {
      if (form.directImage(*out.hom, x) != chase(form, z, x)) {
        out.imagesMatchChase = false;
      }
    }
    for (const auto y : fiberLattice(form, last).elements()) {
      if (form.inverseImage(*out.hom, y) !=
          chase(form, z, y, ChaseDirection::kBackward)) {
        out.imagesMatchChase = false;
      }
    }
  }
  return out;
}

bool inducesIso(const Form& form, const Zigzag& z) {
  const auto first = z.start();
  const auto last = z.end();
  const Interval whole0{form.bottom(first), form.top(first)};
  const Interval wholeN{form.bottom(last), form.top(last)};
  return chase(form, z, whole0) == wholeN &&
         chase(form, z, wholeN, ChaseDirection::kBackward) == whole0;
}

}  // namespace noether
