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
#include <optional>
#include <string>
#include <vector>

#include "noether/detail/registry.hpp"
#include "noether/form.hpp"
#include "noether/lattice.hpp"

namespace noether {

/// Explicit tables of a modular connection between two lattices.
struct ConnectionMaps {
  std::vector<std::uint32_t> left;   // domain -> codomain
  std::vector<std::uint32_t> right;  // codomain -> domain
};

/// Reason the maps fail to be a modular connection, or nullopt when they are
/// one.
std::optional<std::string> connectionDefect(const FiniteLattice& domain,
                                            const FiniteLattice& codomain,
                                            const ConnectionMaps& maps);

/// The form of finite modular lattices with modular connections. The fiber
/// of a lattice is the lattice itself, direct image is the left adjoint and
/// inverse image the right adjoint. Every element is normal and conormal:
/// the embedding of x starts at the interval [bottom, x], the projection of
/// x ends at [x, top]. Those interval objects are created on demand.
class LatticeForm final : public Form {
 public:
  explicit LatticeForm(std::vector<FiniteLattice> lattices,
                       std::vector<std::string> names = {});
  ~LatticeForm() override;

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
  /// Left adjoint = forward chase, right adjoint = backward chase; nullopt
  /// when the pair is not a modular connection.
  std::optional<MorphismRef> realizeInduced(
      ObjectId from, ObjectId to,
      std::span<const ZigzagLeg> legs) const override;
  std::string describe(ObjectId object) const override;
  std::string describe(SubobjectRef x) const override;
  std::string describe(MorphismRef f) const override;

  const FiniteLattice& lattice(ObjectId object) const;
  const ConnectionMaps& maps(MorphismRef f) const;

  /// Validates and records a connection. Throws InstanceIntegrityError when
  /// the maps do not form a modular connection.
  MorphismRef registerConnection(ObjectId domain, ObjectId codomain,
                                 ConnectionMaps maps);

 private:
  struct ObjectRecord;
  struct MorphismRecord;

  const ObjectRecord& record(ObjectId object) const;
  const MorphismRecord& record(MorphismRef f) const;
  void check(SubobjectRef x) const;
  ObjectId intervalObject(SubobjectRef lo, SubobjectRef hi) const;
  MorphismRef internMorphism(ObjectId domain, ObjectId codomain,
                             ConnectionMaps maps) const;

  std::size_t baseCount_ = 0;
  mutable detail::Registry<ObjectRecord> objects_;
  mutable detail::Registry<MorphismRecord> morphisms_;
  mutable std::mutex registeredMutex_;
  std::vector<MorphismRef> registered_;
};

std::shared_ptr<LatticeForm> asLatticeForm(
    std::vector<FiniteLattice> lattices, std::vector<std::string> names = {});

}  // namespace noether
