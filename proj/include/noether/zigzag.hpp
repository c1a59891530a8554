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
#include <vector>

#include "noether/form.hpp"

namespace noether {

/// Finite path G0 - G1 - ... - Gn whose legs point either way.
class Zigzag {
 public:
  explicit Zigzag(ObjectId start) : nodes_{start} {}
  /// Throws DomainError when a leg does not start at the current end node.
  Zigzag(ObjectId start, const std::vector<ZigzagLeg>& legs);

  Zigzag& append(ZigzagLeg leg);
  Zigzag& append(MorphismRef hom, LegDirection direction) {
    return append(ZigzagLeg{hom, direction});
  }

  ObjectId start() const { return nodes_.front(); }
  ObjectId end() const { return nodes_.back(); }
  const std::vector<ObjectId>& nodes() const { return nodes_; }
  const std::vector<ZigzagLeg>& legs() const { return legs_; }
  std::size_t size() const { return legs_.size(); }

  /// Same diagram read from the other end.
  Zigzag reversed() const;
  /// This zigzag followed by `next`, which must start where this one ends.
  Zigzag concat(const Zigzag& next) const;

  friend bool operator==(const Zigzag&, const Zigzag&) = default;

 private:
  std::vector<ObjectId> nodes_;
  std::vector<ZigzagLeg> legs_;
};

enum class ChaseDirection { kForward, kBackward };

/// Forward chasing starts at the first node and applies the direct image
/// along legs pointing forward and the inverse image along the others.
/// Backward chasing is forward chasing of the reversed zigzag.
SubobjectRef chase(const Form& form, const Zigzag& z, SubobjectRef x,
                   ChaseDirection direction = ChaseDirection::kForward);
Interval chase(const Form& form, const Zigzag& z, Interval x,
               ChaseDirection direction = ChaseDirection::kForward);

/// Two-leg zigzag G <- Y -> Y/X for a subfactor [X, Y] of G, through the
/// embedding of Y and the projection at the pullback of X. Throws DomainError
/// when the interval is not a subfactor.
Zigzag canonicalZigzag(const Form& form, Interval subfactor);

struct InducedHom {
  Zigzag zigzag;
  /// Relational composite, for instances with carriers.
  std::optional<Relation> relation;
  /// Concrete induced morphism when the instance can build one.
  std::optional<MorphismRef> hom;
  /// hom's direct and inverse image maps agree with chasing. Vacuously true
  /// without hom.
  bool imagesMatchChase = true;
};

/// Present iff the bottom of the first node chases forward to the bottom of
/// the last and the top of the last chases backward to the top of the first.
std::optional<InducedHom> inducesHom(const Form& form, const Zigzag& z);

/// True iff the interval [bottom, top] chases onto [bottom, top] in both
/// directions.
bool inducesIso(const Form& form, const Zigzag& z);

}  // namespace noether
