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

/// \file
/// Abstract noetherian form: objects ("groups"), morphisms ("homomorphisms"),
/// per-object subobject lattices ("fibers") and the direct/inverse image
/// Galois connection attached to every morphism.
///
/// Handles are plain values. A handle is meaningful only for the form that
/// issued it; every query validates its handles and throws DomainError on a
/// foreign or stale one.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace noether {

struct ObjectId {
  std::uint32_t value = 0;
  friend auto operator<=>(const ObjectId&, const ObjectId&) = default;
};

struct SubobjectRef {
  ObjectId object;
  std::uint32_t id = 0;
  friend auto operator<=>(const SubobjectRef&, const SubobjectRef&) = default;
};

struct MorphismRef {
  ObjectId domain;
  ObjectId codomain;
  std::uint32_t id = 0;
  friend auto operator<=>(const MorphismRef&, const MorphismRef&) = default;
};

enum class LegDirection { kRightward, kLeftward };

/// A rightward leg i is a morphism node[i-1] -> node[i]; a leftward leg is
/// node[i] -> node[i-1].
struct ZigzagLeg {
  MorphismRef hom;
  LegDirection direction = LegDirection::kRightward;
  friend bool operator==(const ZigzagLeg&, const ZigzagLeg&) = default;
};

/// f = embeddingPart . isoPart . projectionPart
struct FactorizationTriple {
  MorphismRef projectionPart;
  MorphismRef isoPart;
  MorphismRef embeddingPart;
  friend bool operator==(const FactorizationTriple&,
                         const FactorizationTriple&) = default;
};

struct Normality {
  bool isNormal = false;
  bool isConormal = false;
  /// Projection with kernel equal to the subobject; present iff isNormal.
  std::optional<MorphismRef> projectionWitness;
  /// Embedding with image equal to the subobject; present iff isConormal.
  std::optional<MorphismRef> embeddingWitness;
  friend bool operator==(const Normality&, const Normality&) = default;
};

/// Pair [lo, hi] of subobjects of one object with lo <= hi.
struct Interval {
  SubobjectRef lo;
  SubobjectRef hi;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Element-level access, available only for concrete instances whose objects
/// have carriers (the group instance).
class ElementView {
 public:
  virtual ~ElementView() = default;
  virtual std::size_t carrierSize(ObjectId object) const = 0;
  virtual std::vector<std::uint32_t> elementMap(MorphismRef f) const = 0;
  /// Registers the map as a morphism when it is a homomorphism.
  virtual std::optional<MorphismRef> homFromMap(
      ObjectId domain, ObjectId codomain,
      std::span<const std::uint32_t> map) const = 0;
};

class Form {
 public:
  virtual ~Form() = default;

  virtual std::string label() const = 0;

  /// Objects supplied when the instance was built.
  virtual std::vector<ObjectId> baseObjects() const = 0;
  /// Every object registered so far, including lazily created ones.
  virtual std::vector<ObjectId> objects() const = 0;
  virtual bool contains(ObjectId object) const = 0;
  virtual bool contains(MorphismRef f) const = 0;

  // Fiber lattice.
  virtual std::size_t fiberSize(ObjectId object) const = 0;
  virtual bool leq(SubobjectRef a, SubobjectRef b) const = 0;
  virtual SubobjectRef meet(SubobjectRef a, SubobjectRef b) const = 0;
  virtual SubobjectRef join(SubobjectRef a, SubobjectRef b) const = 0;
  virtual SubobjectRef bottom(ObjectId object) const = 0;
  virtual SubobjectRef top(ObjectId object) const = 0;

  // Morphisms.
  virtual MorphismRef identity(ObjectId object) const = 0;
  /// after . before
  virtual MorphismRef compose(MorphismRef after, MorphismRef before) const = 0;
  virtual SubobjectRef directImage(MorphismRef f, SubobjectRef x) const = 0;
  virtual SubobjectRef inverseImage(MorphismRef f, SubobjectRef y) const = 0;
  /// Morphisms registered explicitly by the user of the instance.
  virtual std::vector<MorphismRef> registeredMorphisms() const = 0;

  // Normality structure.
  virtual Normality normality(SubobjectRef x) const = 0;
  virtual std::optional<MorphismRef> embedding(SubobjectRef x) const = 0;
  virtual std::optional<MorphismRef> projection(SubobjectRef x) const = 0;
  virtual FactorizationTriple factorize(MorphismRef f) const = 0;

  /// Concrete morphism induced by a zigzag from `from` to `to`, when the
  /// instance can build one. Abstract instances return nullopt.
  virtual std::optional<MorphismRef> realizeInduced(
      ObjectId from, ObjectId to, std::span<const ZigzagLeg> legs) const;

  virtual const ElementView* elementView() const { return nullptr; }

  virtual std::string describe(ObjectId object) const = 0;
  virtual std::string describe(SubobjectRef x) const = 0;
  virtual std::string describe(MorphismRef f) const = 0;
};

/// Non-owning bounded-lattice view of one fiber.
class FiberView {
 public:
  FiberView(const Form& form, ObjectId object);

  ObjectId object() const { return object_; }
  std::size_t size() const { return size_; }
  SubobjectRef at(std::size_t i) const;
  std::vector<SubobjectRef> elements() const;

  bool leq(SubobjectRef a, SubobjectRef b) const { return form_->leq(a, b); }
  SubobjectRef meet(SubobjectRef a, SubobjectRef b) const {
    return form_->meet(a, b);
  }
  SubobjectRef join(SubobjectRef a, SubobjectRef b) const {
    return form_->join(a, b);
  }
  SubobjectRef bottom() const { return form_->bottom(object_); }
  SubobjectRef top() const { return form_->top(object_); }

  /// Pairs (a, b) of fiber indices with a covered by b.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> covers() const;

 private:
  const Form* form_;
  ObjectId object_;
  std::size_t size_;
};

FiberView fiberLattice(const Form& form, ObjectId object);

/// Tabulated direct and inverse image maps of one morphism.
struct ImageMaps {
  MorphismRef hom;
  std::vector<SubobjectRef> direct;   // indexed by domain fiber id
  std::vector<SubobjectRef> inverse;  // indexed by codomain fiber id

  SubobjectRef directImage(SubobjectRef x) const { return direct.at(x.id); }
  SubobjectRef inverseImage(SubobjectRef y) const { return inverse.at(y.id); }
};

ImageMaps images(const Form& form, MorphismRef f);

struct KernelImage {
  SubobjectRef kernel;
  SubobjectRef image;
};

KernelImage kernelImage(const Form& form, MorphismRef f);

bool isEmbedding(const Form& form, MorphismRef f);
bool isProjection(const Form& form, MorphismRef f);
bool isIsomorphism(const Form& form, MorphismRef f);

/// x is normal to y: x <= y, y conormal and the pullback of x along the
/// embedding of y is normal.
bool relativeNormal(const Form& form, SubobjectRef x, SubobjectRef y);

/// Throws DomainError unless both subobjects live in one fiber.
void requireSameFiber(SubobjectRef a, SubobjectRef b);

/// Functorial dual: morphisms reversed, fibers order-reversed, direct and
/// inverse images swapped, normal and conormal swapped.
std::shared_ptr<const Form> dualize(std::shared_ptr<const Form> form);
/// The form a dual was built from; nullptr for any other form.
std::shared_ptr<const Form> dualSource(const Form& form);

/// Relation from the carrier of the first node to that of the last node.
struct Relation {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<bool>> related;  // rows x cols

  bool isFunctional() const;
  /// The function when isFunctional().
  std::vector<std::uint32_t> asMap() const;
};

/// Relational composite of the legs: rightward legs contribute the graph of
/// the map, leftward legs its opposite.
Relation relationalComposite(const ElementView& view, ObjectId from,
                             std::span<const ZigzagLeg> legs);

std::string toString(ObjectId object);
std::string toString(SubobjectRef x);
std::string toString(MorphismRef f);

}  // namespace noether
