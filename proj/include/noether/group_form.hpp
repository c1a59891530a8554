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

#include <memory>
#include <mutex>
#include <unordered_map>

#include "noether/detail/registry.hpp"
#include "noether/finite_group.hpp"
#include "noether/form.hpp"

namespace noether {

struct GroupFormOptions {
  /// Soft cap on the order of any object, base or derived.
  std::size_t maxOrder = kMaxGroupOrder;
};

/// The form of finite groups and their subgroups. Objects are the supplied
/// groups plus subgroup carriers and quotients created on demand; morphisms
/// are element maps. Every subgroup is conormal (witnessed by its inclusion),
/// normal subgroups are witnessed by their quotient maps.
class GroupForm final : public Form, public ElementView {
 public:
  enum class ObjectKind { kBase, kSubgroup, kQuotient };

  struct Provenance {
    ObjectKind kind = ObjectKind::kBase;
    /// For derived objects: the subgroup of the parent it was built from.
    std::optional<SubobjectRef> origin;
  };

  explicit GroupForm(std::vector<FiniteGroup> groups,
                     GroupFormOptions options = {});
  ~GroupForm() override;

  // Form
  std::string label() const override;
  std::vector<ObjectId> baseObjects() const override;
  std::vector<ObjectId> objects() const override;
  bool contains(ObjectId object) const override;
  bool contains(MorphismRef f) const override;
  std::size_t fiberSize(ObjectId object) const override;
  bool leq(SubobjectRef a, SubobjectRef b) const override;
  SubobjectRef meet(SubobjectRef a, SubobjectRef b) const override;
  SubobjectRef join(SubobjectRef a, SubobjectRef b) const override;
  SubobjectRef bottom(ObjectId object) const override;
  SubobjectRef top(ObjectId object) const override;
  MorphismRef identity(ObjectId object) const override;
  MorphismRef compose(MorphismRef after, MorphismRef before) const override;
  SubobjectRef directImage(MorphismRef f, SubobjectRef x) const override;
  SubobjectRef inverseImage(MorphismRef f, SubobjectRef y) const override;
  std::vector<MorphismRef> registeredMorphisms() const override;
  Normality normality(SubobjectRef x) const override;
  std::optional<MorphismRef> embedding(SubobjectRef x) const override;
  std::optional<MorphismRef> projection(SubobjectRef x) const override;
  FactorizationTriple factorize(MorphismRef f) const override;
  std::optional<MorphismRef> realizeInduced(
      ObjectId from, ObjectId to,
      std::span<const ZigzagLeg> legs) const override;
  const ElementView* elementView() const override { return this; }
  std::string describe(ObjectId object) const override;
  std::string describe(SubobjectRef x) const override;
  std::string describe(MorphismRef f) const override;

  // ElementView
  std::size_t carrierSize(ObjectId object) const override;
  std::vector<std::uint32_t> elementMap(MorphismRef f) const override;
  std::optional<MorphismRef> homFromMap(
      ObjectId domain, ObjectId codomain,
      std::span<const std::uint32_t> map) const override;

  const FiniteGroup& group(ObjectId object) const;
  const SubgroupSet& subgroup(SubobjectRef x) const;
  /// Canonical handle of a subgroup given by its elements. Throws
  /// DomainError when the set is not a subgroup.
  SubobjectRef subobject(ObjectId object, const SubgroupSet& set) const;
  SubobjectRef subobject(ObjectId object,
                         std::span<const std::uint32_t> elements) const;
  Provenance provenance(ObjectId object) const;

  /// Validates and records a user-supplied homomorphism.
  MorphismRef registerHom(ObjectId domain, ObjectId codomain,
                          std::vector<std::uint32_t> map);

  /// The group X realized as an object, with its inclusion into the parent.
  MorphismRef inclusionOf(SubobjectRef x) const;
  /// Canonical surjection onto the quotient by a normal subgroup.
  MorphismRef quotientBy(SubobjectRef n) const;

 private:
  struct ObjectRecord;
  struct MorphismRecord;

  const ObjectRecord& record(ObjectId object) const;
  const ObjectRecord& record(SubobjectRef x) const;
  const MorphismRecord& record(MorphismRef f) const;
  ObjectId internObject(detail::Registry<ObjectRecord>::Key key,
                        FiniteGroup group, Provenance provenance) const;
  MorphismRef internMorphism(ObjectId domain, ObjectId codomain,
                             std::vector<std::uint32_t> map) const;

  GroupFormOptions options_;
  std::size_t baseCount_ = 0;
  mutable detail::Registry<ObjectRecord> objects_;
  mutable detail::Registry<MorphismRecord> morphisms_;
  mutable std::mutex registeredMutex_;
  std::vector<MorphismRef> registered_;
};

std::shared_ptr<GroupForm> asGroupForm(std::vector<FiniteGroup> groups,
                                       GroupFormOptions options = {});

}  // namespace noether
